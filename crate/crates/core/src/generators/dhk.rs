//! The layered families `D_{h,k}` of odd period `h`.
//!
//! Layers alternate between *point* layers (`k` vertices labelled `1..=k`)
//! and *subset* layers (one vertex per nonempty proper subset of `[k]`).
//! For `h >= 5` the kinds are
//!
//! ```text
//! S_0 point, S_1 subset, S_2 subset, S_3 point, S_4 subset, S_5 point, …, S_{h-1} subset
//! ```
//!
//! and consecutive layers are joined by one of three rules: *contains*
//! (point `i` -> subset `X` iff `i ∈ X`, or subset -> point likewise),
//! *excludes* (`i ∉ X`) and *equal* (`X -> Y` iff `X = Y`):
//!
//! ```text
//! S_0->S_1 contains, S_1->S_2 equal, S_2->S_3 excludes,
//! S_j->S_{j+1}, S_{j+1}->S_{j+2} excludes   (odd j, 3 <= j <= h-4)
//! S_{h-2}->S_{h-1} contains, S_{h-1}->S_0 excludes
//! ```
//!
//! `h = 3` uses point, subset, subset with contains, equal, contains.
//!
//! [`RuleSource::Figure`] replaces the first rule with *excludes*; that
//! labelling is IDS-free only for `h >= 5`. [`DhkVariant::WithIds`] flips the rule
//! into the last subset layer (`S_{h-2} -> S_{h-1}`, or `S_2 -> S_0` when
//! `h = 3`) from *contains* to *excludes*, which admits the IDS seeded by
//! point `1` of `S_0`.
//!
//! Ids are layer-major; point `i` of a layer has offset `i - 1` and subset
//! `X` has offset `mask(X) - 1` where bit `i - 1` of `mask(X)` is set iff
//! `i ∈ X`. Point `1` of `S_0` is therefore vertex `0`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::{is_strongly_connected, period, scc_period, LayerDecomposition};

/// Largest `k` accepted; subset layers have `2^k - 2` vertices.
pub const DHK_MAX_K: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DhkVariant {
    IdsFree,
    WithIds,
}

/// Which labelling of the first arc rule to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum RuleSource {
    #[default]
    Text,
    Figure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DhkSpec {
    h: usize,
    k: usize,
    variant: DhkVariant,
    rules: RuleSource,
}

impl DhkSpec {
    pub fn new(h: usize, k: usize, variant: DhkVariant, rules: RuleSource) -> Result<Self> {
        if h < 3 || h.is_multiple_of(2) {
            return Err(Error::invalid(format!("D_(h,k) needs an odd h >= 3, got {h}")));
        }
        if !(2..=DHK_MAX_K).contains(&k) {
            return Err(Error::invalid(format!("D_(h,k) needs 2 <= k <= {DHK_MAX_K}, got {k}")));
        }
        Ok(Self { h, k, variant, rules })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> DhkVariant {
        self.variant
    }

    pub fn rules(&self) -> RuleSource {
        self.rules
    }

    fn kinds(&self) -> Vec<Kind> {
        let mut kinds = vec![Kind::Points, Kind::Subsets, Kind::Subsets];
        kinds.extend((3..self.h).map(|i| if i % 2 == 1 { Kind::Points } else { Kind::Subsets }));
        kinds
    }

    /// `rules[i]` joins layer `i` to layer `i + 1 mod h`.
    fn arc_rules(&self) -> Vec<Rule> {
        let h = self.h;
        let mut rules = if h == 3 {
            vec![Rule::Contains, Rule::Equal, Rule::Contains]
        } else {
            let mut r = vec![Rule::Contains, Rule::Equal, Rule::Excludes];
            for _ in (3..h - 3).step_by(2) {
                r.extend([Rule::Excludes, Rule::Excludes]);
            }
            r.extend([Rule::Contains, Rule::Excludes]);
            r
        };
        if self.rules == RuleSource::Figure {
            rules[0] = Rule::Excludes;
        }
        if self.variant == DhkVariant::WithIds {
            let flip = if h == 3 { 2 } else { h - 2 };
            rules[flip] = Rule::Excludes;
        }
        rules
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Points,
    Subsets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    Contains,
    Excludes,
    Equal,
}

/// A constructed `D_{h,k}` with its construction layering.
#[derive(Clone, Debug)]
pub struct DhkGraph {
    pub spec: DhkSpec,
    pub graph: Digraph,
    /// The layering the construction was built on.
    pub layers: LayerDecomposition,
    offsets: Vec<usize>,
    kinds: Vec<Kind>,
}

impl DhkGraph {
    /// Human-readable name such as `S0:1` or `S2:{1,3}`.
    pub fn vertex_label(&self, v: usize) -> String {
        let layer = self.layers.layer_of(v);
        let local = v - self.offsets[layer];
        let mut s = format!("S{layer}:");
        match self.kinds[layer] {
            Kind::Points => {
                let _ = write!(s, "{}", local + 1);
            }
            Kind::Subsets => {
                let mask = local + 1;
                let items: Vec<String> =
                    (0..self.spec.k).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                let _ = write!(s, "{{{}}}", items.join(","));
            }
        }
        s
    }

    /// First vertex of layer `i`.
    pub fn layer_offset(&self, i: usize) -> usize {
        self.offsets[i]
    }
}

/// Builds `D_{h,k}` and checks its structure.
///
/// For `k >= 3` the result must be strongly connected with period exactly
/// `h`. For `k = 2` every subset layer consists of the two singletons, so
/// the graph collapses into cycles: disjoint `h`-cycles (IDS-free) or a
/// single `2h`-cycle; there only the layering and `h | period` are checked.
pub fn gen_dhk(spec: &DhkSpec) -> Result<DhkGraph> {
    let (h, k) = (spec.h, spec.k);
    let kinds = spec.kinds();
    let rules = spec.arc_rules();
    let subset_count = (1usize << k) - 2;
    let size = |kind: Kind| if kind == Kind::Points { k } else { subset_count };

    let mut offsets = Vec::with_capacity(h);
    let mut n = 0;
    for &kind in &kinds {
        offsets.push(n);
        n += size(kind);
    }

    let mut arcs = Vec::new();
    for i in 0..h {
        let j = (i + 1) % h;
        let (from, to) = (kinds[i], kinds[j]);
        for a in 0..size(from) {
            for b in 0..size(to) {
                let joined = match (rules[i], from, to) {
                    (Rule::Equal, Kind::Subsets, Kind::Subsets) => a == b,
                    (Rule::Equal, _, _) => unreachable!("equal rule only joins two subset layers"),
                    (rule, Kind::Points, Kind::Subsets) => member(a, b + 1) == (rule == Rule::Contains),
                    (rule, Kind::Subsets, Kind::Points) => member(b, a + 1) == (rule == Rule::Contains),
                    _ => unreachable!("point layers are never adjacent"),
                };
                if joined {
                    arcs.push((offsets[i] + a, offsets[j] + b));
                }
            }
        }
    }
    let graph = Digraph::from_arcs(n, arcs)?;

    let labels = (0..h).flat_map(|i| std::iter::repeat_n(i, size(kinds[i]))).collect();
    let layers = LayerDecomposition::from_labels(&graph, h, labels)
        .map_err(|e| Error::Construction(format!("layering violated: {e}")))?;

    if k >= 3 {
        if !is_strongly_connected(&graph) {
            return Err(Error::Construction(format!("D_({h},{k}) is not strongly connected")));
        }
        let p = scc_period(&graph)?;
        if p != h {
            return Err(Error::Construction(format!("D_({h},{k}) has period {p}, expected {h}")));
        }
    } else {
        let p = period(&graph);
        if p == 0 || !p.is_multiple_of(h) {
            return Err(Error::Construction(format!("D_({h},2) has period {p}, not a multiple of {h}")));
        }
    }

    Ok(DhkGraph { spec: *spec, graph, layers, offsets, kinds })
}

fn member(point: usize, mask: usize) -> bool {
    mask >> point & 1 == 1
}
