//! Reference implementations that share no code with the library beyond
//! reading a graph's arcs. Slow on purpose.
#![allow(dead_code)]

use idom::Digraph;

pub fn matrix(g: &Digraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.arcs() {
        a[u][v] = true;
    }
    a
}

/// Independent (no arc either way inside) and dominating (every outsider
/// has an in-neighbour inside).
pub fn is_ids(a: &[Vec<bool>], set: &[usize]) -> bool {
    let n = a.len();
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    for &u in set {
        for &v in set {
            if a[u][v] {
                return false;
            }
        }
    }
    (0..n).all(|v| member[v] || set.iter().any(|&u| a[u][v]))
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Every IDS, smallest mask first.
pub fn all_ids(g: &Digraph) -> Vec<Vec<usize>> {
    let a = matrix(g);
    let n = a.len();
    assert!(n <= 20, "oracle enumeration limited to 20 vertices");
    (0..1u64 << n).map(|m| members(m, n)).filter(|s| is_ids(&a, s)).collect()
}

pub fn ids_exists(g: &Digraph) -> bool {
    let a = matrix(g);
    let n = a.len();
    assert!(n <= 20, "oracle enumeration limited to 20 vertices");
    (0..1u64 << n).any(|m| is_ids(&a, &members(m, n)))
}

/// Smallest IDS of an undirected graph: independent, and every outsider
/// has a neighbour inside.
pub fn min_undirected_ids(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    (0..1u64 << n)
        .map(|m| members(m, n))
        .filter(|s| {
            s.iter().all(|&u| s.iter().all(|&v| !adj[u][v]))
                && (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| adj[u][v]))
        })
        .map(|s| s.len())
        .min()
        .expect("a maximal independent set always exists")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// gcd of the lengths `k <= n` for which some closed walk of length `k`
/// exists. Every closed walk splits into cycles and every cycle is a closed
/// walk of length at most `n`, so this is the gcd of cycle lengths.
pub fn period_by_walks(g: &Digraph) -> usize {
    let a = matrix(g);
    let n = a.len();
    let mut power = a.clone();
    let mut h = 0;
    for k in 1..=n {
        if (0..n).any(|v| power[v][v]) {
            h = gcd(h, k);
        }
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if power[i][j] {
                    for l in 0..n {
                        next[i][l] |= a[j][l];
                    }
                }
            }
        }
        power = next;
    }
    h
}

/// Vertices reachable from 0 and back, by plain search on the matrix.
pub fn strongly_connected(g: &Digraph) -> bool {
    let a = matrix(g);
    let n = a.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                let arc = if forward { a[u][v] } else { a[v][u] };
                if arc && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n > 0 && reach(true) && reach(false)
}

/// Layer index of each vertex: BFS distance from 0 modulo `h`.
pub fn layers(g: &Digraph, h: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([0]);
    dist[0] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist.into_iter().map(|d| d % h).collect()
}
