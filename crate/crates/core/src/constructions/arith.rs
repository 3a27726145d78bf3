//! The arithmetic complex `X_n` of 3-term progressions in `Z_n`, its class
//! partition and its rational certificate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::boundary::boundary_matrix;
use crate::complex::{complete_faces, FaceSet};
use crate::error::{Error, Result};
use crate::simplex::{binomial, permutation_sign, Field, Simplex, VertexId};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn check_prime(n: usize) -> Result<()> {
    if n < 5 || !is_prime(n as u64) {
        return Err(Error::range(format!("{n} is not a prime >= 5")));
    }
    Ok(())
}

/// `2^e mod n`.
fn pow2_mod(e: usize, n: usize) -> usize {
    (0..e).fold(1 % n, |acc, _| acc * 2 % n)
}

/// Size of `⟨-1, 2⟩` in `Z_n^*`.
fn generated_size(n: usize) -> usize {
    let mut seen = vec![false; n];
    let mut x = 1;
    while !seen[x] {
        seen[x] = true;
        seen[n - x] = true;
        x = x * 2 % n;
    }
    seen.iter().filter(|&&b| b).count()
}

/// True iff `Z_n^*` is generated by `-1` and `2`.
pub fn artin_condition(n: usize) -> Result<bool> {
    check_prime(n)?;
    Ok(generated_size(n) == n - 1)
}

/// The index of `⟨2⟩` in `Z_n^* / {±1}`.
pub fn group_index(n: usize) -> Result<usize> {
    check_prime(n)?;
    Ok((n - 1) / generated_size(n))
}

/// `{b, b+δ, b+2δ}` as a simplex, with arithmetic mod `n`.
fn progression(n: usize, b: usize, delta: usize) -> Simplex {
    Simplex::new([b, (b + delta) % n, (b + 2 * delta) % n].map(|v| v as VertexId)).expect("three distinct residues mod a prime")
}

/// Progressions of length 3 in `Z_n` whose difference avoids `{0, ±omit}`.
fn progressions_omitting(n: usize, omit: usize) -> FaceSet {
    let faces = (0..n).flat_map(|b| {
        (1..n).filter(move |&dl| dl != omit && dl != n - omit).map(move |dl| progression(n, b, dl))
    });
    FaceSet::from_faces_dedup(n, 2, faces).expect("progressions lie in [0, n)")
}

/// `X_n`: progressions with difference outside `{0, ±1}`.
pub fn arithmetic_complex(n: usize) -> Result<FaceSet> {
    check_prime(n)?;
    Ok(progressions_omitting(n, 1))
}

/// The image of `X_n` under `r ↦ 2^{m-1} r`, which omits the difference `±2^{m-1}`.
/// Its classes are described by [`ArithClasses`].
pub fn arithmetic_complex_relabeled(n: usize) -> Result<FaceSet> {
    check_prime(n)?;
    Ok(progressions_omitting(n, pow2_mod((n - 1) / 2 - 1, n)))
}

/// A directed edge `(from, to)`.
pub type DirectedEdge = (VertexId, VertexId);

/// Edge classes `E_{2^i}` and face classes `F_{2^j}` of the relabeled complex.
#[derive(Clone, Debug)]
pub struct ArithClasses {
    pub n: usize,
    pub m: usize,
    /// `edge_classes[i][b] = (b, b + 2^i)`.
    pub edge_classes: Vec<Vec<DirectedEdge>>,
    /// `face_classes[j][b] = (b, b + 2^j, b + 2^{j+1})`.
    pub face_classes: Vec<Vec<[VertexId; 3]>>,
}

impl ArithClasses {
    /// The omitted difference `2^{m-1} mod n`.
    pub fn omitted_difference(&self) -> usize {
        pow2_mod(self.m - 1, self.n)
    }

    /// Writes the partition as labeled sections.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, class) in self.edge_classes.iter().enumerate() {
            out.push_str(&format!("[E 2^{i}]\n"));
            for (a, b) in class {
                out.push_str(&format!("{a} {b}\n"));
            }
        }
        for (j, class) in self.face_classes.iter().enumerate() {
            out.push_str(&format!("[F 2^{j}]\n"));
            for f in class {
                out.push_str(&format!("{} {} {}\n", f[0], f[1], f[2]));
            }
        }
        out
    }
}

fn require_artin(n: usize) -> Result<()> {
    if !artin_condition(n)? {
        return Err(Error::precondition(format!("Z_{n}^* is not generated by -1 and 2; the classes collide")));
    }
    Ok(())
}

pub fn arith_classes(n: usize) -> Result<ArithClasses> {
    require_artin(n)?;
    let m = (n - 1) / 2;
    let v = |x: usize| (x % n) as VertexId;
    let edge_classes = (0..m)
        .map(|i| {
            let s = pow2_mod(i, n);
            (0..n).map(|b| (v(b), v(b + s))).collect()
        })
        .collect();
    let face_classes = (0..m - 1)
        .map(|j| {
            let s = pow2_mod(j, n);
            (0..n).map(|b| [v(b), v(b + s), v(b + 2 * s)]).collect()
        })
        .collect();
    Ok(ArithClasses { n, m, edge_classes, face_classes })
}

/// Reorders the rows of `M_X` (relabeled complex, over Q) by the `E`-classes and
/// the columns by the `F`-classes, each with its class orientation, and compares
/// entry by entry with the block pattern: `I + Q^{2^i}` on the diagonal, `-I`
/// directly below, zero elsewhere.
pub fn block_form_check(n: usize) -> Result<bool> {
    let cl = arith_classes(n)?;
    let x = arithmetic_complex_relabeled(n)?;
    let mat = boundary_matrix(&x, Field::Q)?;
    let (m, rows, cols) = (cl.m, n * cl.m, n * (cl.m - 1));
    if mat.rows() != binomial(n, 2) || mat.cols() != cols {
        return Ok(false);
    }
    // canonical edge rank -> (reordered row, orientation sign)
    let mut row_of = vec![None; mat.rows()];
    for (i, class) in cl.edge_classes.iter().enumerate() {
        for (b, &(p, q)) in class.iter().enumerate() {
            let sign: i64 = if p < q { 1 } else { -1 };
            let r = Simplex::new([p, q])?.colex_rank();
            if row_of[r].is_some() {
                return Ok(false);
            }
            row_of[r] = Some((i * n + b, sign));
        }
    }
    let col_index: std::collections::HashMap<&Simplex, usize> =
        mat.column_faces().iter().enumerate().map(|(j, f)| (f, j)).collect();
    let mut got = vec![vec![0i64; cols]; rows];
    for (j, class) in cl.face_classes.iter().enumerate() {
        for (b, tri) in class.iter().enumerate() {
            let face = Simplex::new(*tri)?;
            let Some(&c) = col_index.get(&face) else { return Ok(false) };
            let orient = permutation_sign(tri) as i64;
            for &(r, e) in mat.column(c) {
                let Some((row, s)) = row_of[r] else { return Ok(false) };
                got[row][j * n + b] = orient * s * e as i64;
            }
        }
    }
    let expected = |r: usize, c: usize| -> i64 {
        let (bi, rb) = (r / n, r % n);
        let (bj, cb) = (c / n, c % n);
        if bi == bj {
            let shift = pow2_mod(bj, n);
            i64::from(rb == cb) + i64::from(rb == (cb + shift) % n)
        } else if bi == bj + 1 {
            -i64::from(rb == cb)
        } else {
            0
        }
    };
    debug_assert!(m >= 2);
    Ok((0..rows).all(|r| (0..cols).all(|c| got[r][c] == expected(r, c))))
}

/// Integer weights on canonically oriented edges: `u(p,q) = ±2^i` where the
/// directed edge `p → q` or `q → p` lies in `E_{2^i}`.
#[derive(Clone, Debug)]
pub struct CertificateVector {
    pub n: usize,
    /// Indexed by the colex rank of the edge.
    pub weights: Vec<BigInt>,
}

impl CertificateVector {
    pub fn new(n: usize) -> Result<Self> {
        let cl = arith_classes(n)?;
        let mut weights = vec![BigInt::zero(); binomial(n, 2)];
        for (i, class) in cl.edge_classes.iter().enumerate() {
            let w = BigInt::one() << i;
            for &(p, q) in class {
                let r = Simplex::new([p, q])?.colex_rank();
                weights[r] = if p < q { w.clone() } else { -w.clone() };
            }
        }
        Ok(CertificateVector { n, weights })
    }

    /// `⟨u, ∂σ⟩` for the ascending orientation of `σ`.
    pub fn pair(&self, sigma: &Simplex) -> BigInt {
        crate::boundary::boundary_column(sigma)
            .into_iter()
            .fold(BigInt::zero(), |acc, (r, e)| acc + &self.weights[r] * BigInt::from(e))
    }
}

/// True iff `⟨u, ∂σ⟩ = 0` exactly for the faces `σ` of the relabeled complex.
pub fn certificate_check(n: usize) -> Result<bool> {
    let u = CertificateVector::new(n)?;
    let x = arithmetic_complex_relabeled(n)?;
    Ok(complete_faces(n, 2)?.iter().all(|s| u.pair(s).is_zero() == x.contains(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_errors() {
        assert!(artin_condition(4).is_err());
        assert!(artin_condition(9).is_err());
        assert!(artin_condition(3).is_err());
        assert!(arithmetic_complex(15).is_err());
    }

    #[test]
    fn artin_small_primes() {
        let good: Vec<usize> = [5, 7, 11, 13, 17, 19, 23, 29, 31].into_iter().filter(|&p| artin_condition(p).unwrap()).collect();
        assert_eq!(good, vec![5, 7, 11, 13, 19, 23, 29]);
        assert_eq!(group_index(17).unwrap(), 2);
        assert_eq!(group_index(31).unwrap(), 3);
        assert_eq!(group_index(7).unwrap(), 1);
    }

    #[test]
    fn sizes() {
        for n in [5, 7, 11, 13, 17] {
            assert_eq!(arithmetic_complex(n).unwrap().len(), n * ((n - 1) / 2 - 1));
        }
    }

    #[test]
    fn relabeling_is_a_scaling() {
        for n in [5, 7, 11, 13] {
            let m = (n - 1) / 2;
            let a = pow2_mod(m - 1, n) as VertexId;
            let scaled = arithmetic_complex(n).unwrap().map_vertices(|v| v * a % n as VertexId).unwrap();
            assert_eq!(scaled, arithmetic_complex_relabeled(n).unwrap());
        }
    }

    #[test]
    fn designed_cancellation() {
        let u = CertificateVector::new(11).unwrap();
        for i in 0..3 {
            let s = pow2_mod(i, 11);
            let f = Simplex::new([0, s as u32, (2 * s % 11) as u32]).unwrap();
            assert!(u.pair(&f).is_zero());
        }
    }

    #[test]
    fn omitted_difference_is_plus_minus_half() {
        for n in [5, 7, 11, 13, 19] {
            let w = arith_classes(n).unwrap().omitted_difference();
            assert!(2 * w % n == 1 || 2 * w % n == n - 1);
        }
    }

    #[test]
    fn checks_pass_and_fail_cleanly() {
        assert!(block_form_check(5).unwrap());
        assert!(certificate_check(7).unwrap());
        assert!(block_form_check(17).is_err());
        assert!(certificate_check(31).is_err());
    }
}
