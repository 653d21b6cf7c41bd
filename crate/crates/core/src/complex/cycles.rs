//! Cycle enumeration on 2-complexes: simple 1-cycles of the 1-skeleton and
//! closed-surface 2-cycles drawn from the mod-2 kernel of the face boundary.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::{orient_faces, AbstractOneCycle, AbstractTwoCycle, ComplexError, Guards, TwoComplex};

/// All simple cycles of the 1-skeleton, canonical and sorted.
pub fn enumerate_one_cycles(c: &TwoComplex) -> Result<Vec<AbstractOneCycle>, ComplexError> {
    enumerate_one_cycles_with(c, &Guards::default())
}

pub fn enumerate_one_cycles_with(c: &TwoComplex, guards: &Guards) -> Result<Vec<AbstractOneCycle>, ComplexError> {
    guards.check("cycle enumeration vertices", c.vertex_count(), guards.max_cycle_vertices)?;
    let adj = c.adjacency();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; c.vertex_count()];
    for start in 0..c.vertex_count() {
        path.push(start);
        on_path[start] = true;
        extend_paths(&adj, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort();
    Ok(out)
}

// Paths only visit vertices above `start`; each cycle is emitted once, in the
// direction whose second vertex is smaller than its last.
fn extend_paths(
    adj: &[Vec<usize>],
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<AbstractOneCycle>,
) {
    let last = *path.last().expect("path starts nonempty");
    for &next in &adj[last] {
        if next == start && path.len() >= 3 && path[1] < last {
            out.push(AbstractOneCycle::new(path.clone()).expect("simple cycle"));
        }
        if next > start && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            extend_paths(adj, start, path, on_path, out);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Basis of the kernel of the face boundary map over GF(2), as face bitmasks.
pub fn mod2_cycle_basis(c: &TwoComplex) -> Result<Vec<u64>, ComplexError> {
    mod2_cycle_basis_with(c, &Guards::default())
}

pub fn mod2_cycle_basis_with(c: &TwoComplex, guards: &Guards) -> Result<Vec<u64>, ComplexError> {
    let faces = c.faces().len();
    guards.check("faces", faces, guards.max_surface_faces.min(64))?;
    // Compact the edges that actually bound faces so a face column fits a u128.
    let mut compact: HashMap<usize, u32> = HashMap::new();
    let mut columns = Vec::with_capacity(faces);
    for f in 0..faces {
        let mut col = 0u128;
        for (e, _) in c.face_boundary(f) {
            let next = compact.len() as u32;
            let bit = *compact.entry(e).or_insert(next);
            col ^= 1u128 << bit;
        }
        columns.push(col);
    }

    // XOR basis keyed by lowest set bit; each reduced vector tracks the faces it combines.
    let mut pivots: Vec<(u128, u64)> = Vec::new();
    let mut kernel = Vec::new();
    for (f, &col) in columns.iter().enumerate() {
        let (mut v, mut combo) = (col, 1u64 << f);
        while v != 0 {
            let low = v & v.wrapping_neg();
            match pivots.iter().find(|(p, _)| p & p.wrapping_neg() == low) {
                Some(&(p, pc)) => {
                    v ^= p;
                    combo ^= pc;
                }
                None => break,
            }
        }
        if v == 0 {
            kernel.push(combo);
        } else {
            pivots.push((v, combo));
        }
    }
    Ok(kernel)
}

/// Every vector of the span of `basis` (including zero), as face bitmasks.
pub fn span(basis: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &b in basis {
        let doubled: Vec<u64> = out.iter().map(|&v| v ^ b).collect();
        out.extend(doubled);
    }
    out
}

fn mask_faces(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// The nonzero mod-2 2-cycles whose support is a connected closed orientable
/// surface, each with a consistent orientation (lowest face positive).
pub fn surface_two_cycles(c: &TwoComplex) -> Result<Vec<AbstractTwoCycle>, ComplexError> {
    surface_two_cycles_with(c, &Guards::default())
}

pub fn surface_two_cycles_with(c: &TwoComplex, guards: &Guards) -> Result<Vec<AbstractTwoCycle>, ComplexError> {
    let basis = mod2_cycle_basis_with(c, guards)?;
    guards.check("mod-2 cycle rank", basis.len(), guards.max_cycle_rank)?;
    let mut out: Vec<AbstractTwoCycle> = span(&basis)
        .into_par_iter()
        .filter(|&m| m != 0)
        .filter_map(|m| as_closed_surface(c, &mask_faces(m)))
        .collect();
    out.sort();
    Ok(out)
}

/// Checks the support is a connected closed orientable surface and returns it oriented.
pub fn as_closed_surface(c: &TwoComplex, support: &[usize]) -> Option<AbstractTwoCycle> {
    let mut edge_uses: HashMap<usize, usize> = HashMap::new();
    for &f in support {
        for (e, _) in c.face_boundary(f) {
            *edge_uses.entry(e).or_default() += 1;
        }
    }
    if edge_uses.values().any(|&k| k != 2) {
        return None;
    }
    let vertices: BTreeSet<usize> = support.iter().flat_map(|&f| c.faces()[f]).collect();
    if !vertices.iter().all(|&v| link_is_circle(c, support, v)) {
        return None;
    }
    let oriented = orient_faces(c, support)?;
    if !face_adjacency_connected(c, support) {
        return None;
    }
    Some(AbstractTwoCycle::new(oriented))
}

// Every edge already lies in exactly two support faces, so each link vertex
// has degree two; the link is one circle iff it is connected.
fn link_is_circle(c: &TwoComplex, support: &[usize], v: usize) -> bool {
    let link: Vec<(usize, usize)> = support
        .iter()
        .map(|&f| c.faces()[f])
        .filter(|f| f.contains(&v))
        .map(|f| {
            let o: Vec<usize> = f.into_iter().filter(|&x| x != v).collect();
            (o[0], o[1])
        })
        .collect();
    let nodes: BTreeSet<usize> = link.iter().flat_map(|&(a, b)| [a, b]).collect();
    let Some(&first) = nodes.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(x) = stack.pop() {
        for &(a, b) in &link {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == nodes.len()
}

fn face_adjacency_connected(c: &TwoComplex, support: &[usize]) -> bool {
    let Some(&first) = support.first() else {
        return false;
    };
    let edges_of = |f: usize| c.face_boundary(f).map(|(e, _)| e);
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(f) = stack.pop() {
        let ef = edges_of(f);
        for &g in support {
            if !seen.contains(&g) && edges_of(g).iter().any(|e| ef.contains(e)) {
                seen.insert(g);
                stack.push(g);
            }
        }
    }
    seen.len() == support.len()
}

/// All (1-cycle, surface 2-cycle) pairs sharing no vertex, sorted.
pub fn lemma32_pairs(c: &TwoComplex) -> Result<Vec<(AbstractOneCycle, AbstractTwoCycle)>, ComplexError> {
    lemma32_pairs_with(c, &Guards::default())
}

pub fn lemma32_pairs_with(
    c: &TwoComplex,
    guards: &Guards,
) -> Result<Vec<(AbstractOneCycle, AbstractTwoCycle)>, ComplexError> {
    if c.apexes().is_none() {
        return Err(ComplexError::NotASuspension);
    }
    let ones = enumerate_one_cycles_with(c, guards)?;
    let twos = surface_two_cycles_with(c, guards)?;
    let vertex_mask = |vs: &mut dyn Iterator<Item = usize>| vs.fold(0u64, |m, v| m | 1 << v);
    let two_masks: Vec<u64> = twos.iter().map(|z| vertex_mask(&mut z.vertices(c).into_iter())).collect();
    let mut out: Vec<(AbstractOneCycle, AbstractTwoCycle)> = ones
        .par_iter()
        .flat_map_iter(|z1| {
            let m1 = vertex_mask(&mut z1.vertices().iter().copied());
            twos.iter()
                .zip(&two_masks)
                .filter(move |(_, &m2)| m1 & m2 == 0)
                .map(move |(z2, _)| (z1.clone(), z2.clone()))
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{k6, suspension, suspension_two_cycle, Graph, Triangle};

    /// Counts simple cycles by brute force over vertex subsets and orderings.
    fn cycle_count_oracle(adj: &[Vec<usize>]) -> usize {
        let n = adj.len();
        let mut count = 0;
        for mask in 0u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if vs.len() < 3 {
                continue;
            }
            // Fix the first vertex; count orderings of the rest, halve for direction.
            let rest = &vs[1..];
            let mut perms = 0;
            permute(&mut rest.to_vec(), 0, &mut |p| {
                let mut seq = vec![vs[0]];
                seq.extend_from_slice(p);
                let closed = (0..seq.len()).all(|i| adj[seq[i]].contains(&seq[(i + 1) % seq.len()]));
                if closed {
                    perms += 1;
                }
            });
            count += perms / 2;
        }
        count
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn one_cycles_of_suspended_triangle() {
        let s = suspension(&Graph::complete(3));
        let cycles = enumerate_one_cycles(&s).unwrap();
        // Oracle over K5 minus the apex edge: 37 cycles of K5, 15 of them use it.
        assert_eq!(cycle_count_oracle(&s.adjacency()), 22);
        assert_eq!(cycles.len(), 22);
        let distinct: BTreeSet<_> = cycles.iter().collect();
        assert_eq!(distinct.len(), cycles.len());
        assert!(cycles.iter().all(|z| z.lies_in(&s)));
    }

    #[test]
    fn one_cycles_small_cases() {
        let k3 = TwoComplex::new(3, vec![(0, 1), (1, 2), (0, 2)], vec![], None).unwrap();
        assert_eq!(enumerate_one_cycles(&k3).unwrap().len(), 1);

        let k6c = TwoComplex::new(6, k6().edges().collect(), vec![], None).unwrap();
        let cycles = enumerate_one_cycles(&k6c).unwrap();
        assert_eq!(cycles.iter().filter(|z| z.len() == 3).count(), 20);
        assert_eq!(cycles.len(), cycle_count_oracle(&k6c.adjacency()));
    }

    #[test]
    fn one_cycles_guard() {
        let big = TwoComplex::new(10, vec![(0, 1)], vec![], None).unwrap();
        assert!(matches!(enumerate_one_cycles(&big), Err(ComplexError::GuardExceeded { .. })));
    }

    #[test]
    fn suspended_triangle_surfaces() {
        let s = suspension(&Graph::complete(3));
        let basis = mod2_cycle_basis(&s).unwrap();
        assert_eq!(span(&basis).len(), 2);
        let surfaces = surface_two_cycles(&s).unwrap();
        assert_eq!(surfaces.len(), 1);
        assert_eq!(surfaces[0].faces().len(), 6);
    }

    #[test]
    fn suspended_k6_kernel_and_surfaces() {
        let s = suspension(&k6());
        let basis = mod2_cycle_basis(&s).unwrap();
        // H2(S(K6)) ~ H1(K6), rank 15 - 6 + 1.
        assert_eq!(basis.len(), 10);
        let all = span(&basis);
        assert_eq!(all.len(), 1024);
        for m in &all {
            let z = AbstractTwoCycle::new(mask_faces(*m).into_iter().map(|f| (f, 1)).collect());
            assert!(z.mod2_boundary(&s).iter().all(|b| !b));
        }
        let surfaces = surface_two_cycles(&s).unwrap();
        for t in Triangle::all() {
            let z = suspension_two_cycle(&s, t).unwrap();
            assert!(surfaces.contains(&z), "S({t:?}) missing");
        }
        for z in &surfaces {
            assert!(z.signed_boundary(&s).iter().all(|&b| b == 0));
        }
    }

    #[test]
    fn projective_plane_is_rejected() {
        // Six-vertex real projective plane: a closed surface that is not orientable.
        let faces = vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let mut edges = BTreeSet::new();
        for f in &faces {
            for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let c = TwoComplex::new(6, edges.into_iter().collect(), faces, None).unwrap();
        let basis = mod2_cycle_basis(&c).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(surface_two_cycles(&c).unwrap().is_empty());
    }
}
