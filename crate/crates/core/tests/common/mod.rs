//! Brute-force reference implementations shared by the integration tests.
//! They deliberately avoid the library's decision procedures.

#![allow(dead_code, clippy::needless_range_loop)]

use switchsep::{VertexLabeling, WeightedGraph};

/// Every graph on `n` vertices over `Z_q`, in base-`q` order of the upper
/// triangle.
pub fn all_graphs(q: u32, n: usize) -> impl Iterator<Item = WeightedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = (q as u64).pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            let w = (code % q as u64) as u32;
            code /= q as u64;
            if w != 0 {
                edges.push((u, v, w));
            }
        }
        WeightedGraph::new(q, n, &edges).unwrap()
    })
}

/// Every labeling in `Z_q^n`.
pub fn all_labelings(q: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % q as u64) as u32;
                code /= q as u64;
                d
            })
            .collect()
    })
}

/// Weight after switching by `lab`, computed from scratch.
pub fn switched_weight(g: &WeightedGraph, lab: &[u32], u: usize, v: usize) -> u32 {
    (g.weight(u, v) as u32 + lab[u] + lab[v]) % g.q()
}

/// `sep[mask]` is true iff some labeling leaves no edge between `mask` and
/// its complement. Uses that the sets separated by one labeling are exactly
/// the unions of connected components of the switched graph.
pub fn brute_separated_masks(g: &WeightedGraph) -> Vec<bool> {
    let n = g.n();
    let mut sep = vec![false; 1 << n];
    for lab in all_labelings(g.q(), n) {
        // component id per vertex by flood fill
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    if v != u && comp[v] == usize::MAX && switched_weight(g, &lab, u, v) != 0 {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        for pick in 0u32..(1 << count) {
            let mask = (0..n).filter(|&v| pick >> comp[v] & 1 == 1).fold(0usize, |m, v| m | 1 << v);
            sep[mask] = true;
        }
    }
    sep
}

/// Additivity by exhaustive labeling search.
pub fn brute_additive(g: &WeightedGraph) -> Option<Vec<u32>> {
    let n = g.n();
    all_labelings(g.q(), n).find(|lab| {
        (0..n).all(|u| (u + 1..n).all(|v| (lab[u] + lab[v]) % g.q() == g.weight(u, v) as u32))
    })
}

/// Separability of the whole graph by exhaustive labeling search.
pub fn brute_separable(g: &WeightedGraph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let sep = brute_separated_masks(g);
    (0..1usize << n).any(|m| {
        let k = m.count_ones() as usize;
        (2..=n - 2).contains(&k) && sep[m]
    })
}

pub fn labeling(q: u32, labels: &[u32]) -> VertexLabeling {
    VertexLabeling::new(q, labels.to_vec()).unwrap()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut x = p.clone();
            x.insert(pos, n - 1);
            out.push(x);
        }
    }
    out
}

/// All Latin squares of order `m` as row-major tables.
pub fn latin_squares(m: usize) -> Vec<Vec<u32>> {
    fn fill(m: usize, cell: usize, t: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cell == m * m {
            out.push(t.clone());
            return;
        }
        let (r, c) = (cell / m, cell % m);
        for v in 0..m as u32 {
            if (0..c).any(|k| t[r * m + k] == v) || (0..r).any(|k| t[k * m + c] == v) {
                continue;
            }
            t[cell] = v;
            fill(m, cell + 1, t, out);
        }
        t[cell] = u32::MAX;
    }
    let mut out = Vec::new();
    fill(m, 0, &mut vec![u32::MAX; m * m], &mut out);
    out
}

/// All Latin cubes (ternary quasigroups) of order `m`, flat row-major.
pub fn latin_cubes(m: usize) -> Vec<Vec<u32>> {
    fn fill(m: usize, cell: usize, t: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cell == m * m * m {
            out.push(t.clone());
            return;
        }
        let (i, j, k) = (cell / (m * m), cell / m % m, cell % m);
        let at = |t: &Vec<u32>, a: usize, b: usize, c: usize| t[a * m * m + b * m + c];
        for v in 0..m as u32 {
            if (0..k).any(|x| at(t, i, j, x) == v)
                || (0..j).any(|x| at(t, i, x, k) == v)
                || (0..i).any(|x| at(t, x, j, k) == v)
            {
                continue;
            }
            t[cell] = v;
            fill(m, cell + 1, t, out);
        }
        t[cell] = u32::MAX;
    }
    let mut out = Vec::new();
    fill(m, 0, &mut vec![u32::MAX; m * m * m], &mut out);
    out
}

/// Whether a ternary table `t` of order `m` equals `G(x_k, H(x_i, x_j))` for
/// some Latin `H` from `squares` and Latin `G`, with `{i, j}` the inner
/// positions (0-based) and `k` the remaining one.
pub fn brute_ternary_separable(t: &[u32], m: usize, i: usize, j: usize, squares: &[Vec<u32>]) -> bool {
    let k = 3 - i - j;
    let at = |idx: [usize; 3]| t[idx[0] * m * m + idx[1] * m + idx[2]];
    squares.iter().any(|h| {
        let mut g = vec![u32::MAX; m * m];
        for a in 0..m {
            for b in 0..m {
                let hv = h[a * m + b] as usize;
                for c in 0..m {
                    let mut idx = [0; 3];
                    idx[i] = a;
                    idx[j] = b;
                    idx[k] = c;
                    let v = at(idx);
                    let slot = &mut g[c * m + hv];
                    if *slot == u32::MAX {
                        *slot = v;
                    } else if *slot != v {
                        return false;
                    }
                }
            }
        }
        // G must be Latin
        (0..m).all(|r| {
            let mut row: Vec<u32> = (0..m).map(|c| g[r * m + c]).collect();
            let mut col: Vec<u32> = (0..m).map(|c| g[c * m + r]).collect();
            row.sort_unstable();
            col.sort_unstable();
            row == (0..m as u32).collect::<Vec<_>>() && col == (0..m as u32).collect::<Vec<_>>()
        })
    })
}
