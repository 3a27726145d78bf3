use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::simplex::{subsets_colex, Simplex};

/// All `d`-faces through vertex 0.
pub fn star_hypertree(n: usize, d: usize) -> Result<FaceSet> {
    if d == 0 || d >= n {
        return Err(Error::range(format!("star hypertree needs 1 <= d < n, got n = {n}, d = {d}")));
    }
    let faces = subsets_colex(n - 1, d).map(|t| {
        let v: Vec<u32> = std::iter::once(0).chain(t.vertices().iter().map(|x| x + 1)).collect();
        Simplex::new(v).expect("0 is not in the shifted face")
    });
    FaceSet::new(n, d, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{is_hypertree, shadow};
    use crate::simplex::{binomial, Field};

    #[test]
    fn counts_and_hypertree() {
        assert_eq!(star_hypertree(5, 2).unwrap().len(), 6);
        assert_eq!(star_hypertree(6, 3).unwrap().len(), binomial(5, 3));
        for field in [Field::F2, Field::Q] {
            let s = star_hypertree(7, 2).unwrap();
            assert!(is_hypertree(&s, field));
            assert_eq!(shadow(&s, field), crate::complex::complement(&s));
        }
    }
}
