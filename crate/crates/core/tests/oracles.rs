//! Independent oracles: plain Gaussian elimination over Q and F2 on dense
//! matrices built here, and hypercuts straight from the definition.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shadowcut::constructions::{arithmetic_complex, group_index};
use shadowcut::homology::{
    coboundary_of_graph, cut_size_formula, face_rank, is_hypercut, is_hypercut_via_links, CutProfile, LinkGraph,
};
use shadowcut::search::{max_hypercut_exhaustive, SweepConfig};
use shadowcut::{FaceSet, Field, Simplex};

/// Lexicographic list of `k`-subsets of `0..n`.
fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Signed boundary of an ascending face against a lexicographic row index.
fn signed_boundary(face: &[u32], rows: &[Vec<u32>]) -> Vec<(usize, i64)> {
    (0..face.len())
        .map(|i| {
            let facet: Vec<u32> = face.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            let r = rows.iter().position(|x| *x == facet).unwrap();
            (r, if i % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

fn rank_q(cols: &[Vec<(usize, i64)>], nrows: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = (0..nrows).map(|_| vec![BigRational::zero(); cols.len()]).collect();
    for (j, c) in cols.iter().enumerate() {
        for &(r, v) in c {
            m[r][j] = BigRational::from_integer(BigInt::from(v));
        }
    }
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][col].clone();
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone() * &inv;
                for c in col..cols.len() {
                    let sub = m[rank][c].clone() * &f;
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_f2(cols: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &c in cols {
        let mut v = c;
        for b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

fn to_face_set(n: u32, d: usize, faces: &[Vec<u32>]) -> FaceSet {
    FaceSet::new(n as usize, d, faces.iter().map(|f| Simplex::new(f.iter().copied()).unwrap())).unwrap()
}

#[test]
fn rational_rank_matches_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(4..=7u32);
        let d = rng.gen_range(1..=3usize).min(n as usize - 1);
        let rows = subsets(n, d);
        let all = subsets(n, d + 1);
        let p: f64 = rng.gen();
        let pick: Vec<Vec<u32>> = all.into_iter().filter(|_| rng.gen::<f64>() < p).collect();
        let cols: Vec<_> = pick.iter().map(|f| signed_boundary(f, &rows)).collect();
        let fs = to_face_set(n, d, &pick);
        assert_eq!(face_rank(&fs, Field::Q), rank_q(&cols, rows.len()), "n={n} d={d}");
        let masks: Vec<u64> = cols.iter().map(|c| c.iter().fold(0u64, |m, &(r, _)| m | 1 << r)).collect();
        if rows.len() <= 64 {
            assert_eq!(face_rank(&fs, Field::F2), rank_f2(&masks), "n={n} d={d}");
        }
    }
}

#[test]
fn boundary_squares_to_zero_symbolically() {
    for n in 3..=7u32 {
        for d in 2..=3usize.min(n as usize - 1) {
            let mid = subsets(n, d);
            let low = subsets(n, d - 1);
            for face in subsets(n, d + 1) {
                let mut acc = vec![0i64; low.len()];
                for (r, s) in signed_boundary(&face, &mid) {
                    for (q, t) in signed_boundary(&mid[r], &low) {
                        acc[q] += s * t;
                    }
                }
                assert!(acc.iter().all(|&x| x == 0));
            }
        }
    }
}

#[test]
fn arithmetic_rank_deficiency_by_dense_elimination() {
    for n in [7u32, 11, 13, 17] {
        let x = arithmetic_complex(n as usize).unwrap();
        let rows = subsets(n, 2);
        let cols: Vec<_> = x.iter().map(|f| signed_boundary(f.vertices(), &rows)).collect();
        let r = rank_q(&cols, rows.len());
        let idx = group_index(n as usize).unwrap();
        assert_eq!(r, x.len() - (n as usize - 1) * (idx - 1), "n={n}");
        assert_eq!(r, face_rank(&x, Field::Q));
    }
}

/// All hypercuts of `K_n^2` over F2 as triangle sets: complements of closed sets of rank `C(n-1,2) - 1`.
fn hypercuts_by_definition(n: u32) -> Vec<BTreeSet<Vec<u32>>> {
    let rows = subsets(n, 2);
    let tris = subsets(n, 3);
    let cols: Vec<u64> =
        tris.iter().map(|f| signed_boundary(f, &rows).iter().fold(0u64, |m, &(r, _)| m | 1 << r)).collect();
    let target = (n as usize - 1) * (n as usize - 2) / 2 - 1;
    let mut out = Vec::new();
    for keep in 0u64..1 << tris.len() {
        let inside: Vec<u64> = (0..tris.len()).filter(|&i| keep >> i & 1 == 1).map(|i| cols[i]).collect();
        if rank_f2(&inside) != target {
            continue;
        }
        let closed = (0..tris.len()).filter(|&i| keep >> i & 1 == 0).all(|i| {
            let mut more = inside.clone();
            more.push(cols[i]);
            rank_f2(&more) > target
        });
        if closed {
            out.push((0..tris.len()).filter(|&i| keep >> i & 1 == 0).map(|i| tris[i].clone()).collect());
        }
    }
    out
}

#[test]
fn hypercuts_from_definition_match_link_criterion() {
    for n in [4u32, 5] {
        let by_def: BTreeSet<BTreeSet<Vec<u32>>> = hypercuts_by_definition(n).into_iter().collect();
        let mut by_links = BTreeSet::new();
        let others = subsets(n - 1, 2);
        for mask in 1u32..1 << others.len() {
            let g = LinkGraph::from_edges(
                n as usize,
                n - 1,
                (0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| (others[i][0], others[i][1])),
            )
            .unwrap();
            let c = coboundary_of_graph(&g);
            if !c.is_empty() && is_hypercut_via_links(&c).unwrap() {
                assert!(is_hypercut(&c, Field::F2));
                by_links.insert(c.iter().map(|f| f.vertices().to_vec()).collect::<BTreeSet<_>>());
            }
        }
        assert_eq!(by_def, by_links, "n={n}");
    }
}

#[test]
fn largest_hypercut_at_six_by_definition() {
    let cuts = hypercuts_by_definition(6);
    let best = cuts.iter().map(BTreeSet::len).max().unwrap();
    let count = cuts.iter().filter(|c| c.len() == best).count();
    assert_eq!((best, count), (10, 192));
    let r = max_hypercut_exhaustive(SweepConfig::new(6)).unwrap();
    assert_eq!((r.max_size, r.maximizers), (best, count));
}

#[test]
fn cut_size_by_counting_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(4..=11u32);
        let edges: Vec<(u32, u32)> =
            subsets(n - 1, 2).into_iter().filter(|_| rng.gen_bool(0.4)).map(|e| (e[0], e[1])).collect();
        let g = LinkGraph::from_edges(n as usize, n - 1, edges.iter().copied()).unwrap();
        let odd = subsets(n, 3)
            .iter()
            .filter(|t| edges.iter().filter(|(a, b)| t.contains(a) && t.contains(b)).count() % 2 == 1)
            .count();
        assert_eq!(coboundary_of_graph(&g).len(), odd);
        assert_eq!(cut_size_formula(&CutProfile::of(&g), n as usize), odd as i64);
    }
}

#[test]
fn rational_oracle_sanity() {
    // three edges of a triangle span a 2-dimensional space
    let rows = subsets(3, 1);
    let cols: Vec<_> = subsets(3, 2).iter().map(|f| signed_boundary(f, &rows)).collect();
    assert_eq!(rank_q(&cols, rows.len()), 2);
    assert_eq!(rank_f2(&[0b011, 0b110, 0b101]), 2);
}
