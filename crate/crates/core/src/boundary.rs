//! The matrix of `∂_d` restricted to a face set.

use std::fmt::Write as _;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Gf2Matrix, SparseVector};
use crate::simplex::{binomial, Field, Simplex};

/// Boundary matrix with rows indexed by all `(d-1)`-faces of `K_n` and columns
/// by the faces of a face set, both in colex order. Columns use the ascending
/// orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    field: Field,
    n: usize,
    d: usize,
    columns: Vec<Simplex>,
    /// Per column: (row index, ±1), ascending by row.
    entries: Vec<Vec<(usize, i8)>>,
}

/// Signed boundary of one face as (colex index of facet, coefficient).
pub fn boundary_column(face: &Simplex) -> Vec<(usize, i8)> {
    let mut col: Vec<(usize, i8)> = (0..=face.dim())
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            (face.facet(i).expect("dim >= 1").colex_rank(), sign)
        })
        .collect();
    col.sort_unstable_by_key(|e| e.0);
    col
}

/// Boundary column as a sparse vector in `C(n, d)` coordinates.
pub fn boundary_vector(face: &Simplex, n: usize, field: Field) -> SparseVector {
    let dim = binomial(n, face.dim());
    let entries = boundary_column(face)
        .into_iter()
        .map(|(r, s)| (r, if field == Field::F2 { 1 } else { s as i64 }))
        .collect();
    SparseVector { dim, entries }
}

pub fn boundary_matrix(fs: &FaceSet, field: Field) -> Result<BoundaryMatrix> {
    if fs.dim() == 0 {
        return Err(Error::invalid("no boundary matrix in dimension 0"));
    }
    let columns: Vec<Simplex> = fs.iter().cloned().collect();
    let entries = columns
        .iter()
        .map(|f| {
            boundary_column(f)
                .into_iter()
                .map(|(r, s)| (r, if field == Field::F2 { 1 } else { s }))
                .collect()
        })
        .collect();
    Ok(BoundaryMatrix { field, n: fs.n(), d: fs.dim(), columns, entries })
}

impl BoundaryMatrix {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        binomial(self.n, self.d)
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column_faces(&self) -> &[Simplex] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[(usize, i8)] {
        &self.entries[j]
    }

    pub fn column_vector(&self, j: usize) -> SparseVector {
        SparseVector {
            dim: self.rows(),
            entries: self.entries[j].iter().map(|&(r, s)| (r, s as i64)).collect(),
        }
    }

    pub fn to_gf2(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows(), self.cols());
        for (j, col) in self.entries.iter().enumerate() {
            for &(r, _) in col {
                m.set(r, j, true);
            }
        }
        m
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows(), self.cols());
        for (j, col) in self.entries.iter().enumerate() {
            for &(r, s) in col {
                m.set(r, j, s.into());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::F2 => self.to_gf2().rank(),
            Field::Q => self.to_exact().rank(),
        }
    }

    /// SMS triplet text: `rows cols M`, then `i j value` (1-based), then `0 0 0`.
    pub fn to_sms(&self) -> String {
        let mut triples: Vec<(usize, usize, i8)> = Vec::new();
        for (j, col) in self.entries.iter().enumerate() {
            for &(r, s) in col {
                triples.push((r, j, s));
            }
        }
        triples.sort_unstable();
        let mut out = String::new();
        let _ = writeln!(out, "{} {} M", self.rows(), self.cols());
        for (i, j, v) in triples {
            let _ = writeln!(out, "{} {} {}", i + 1, j + 1, v);
        }
        out.push_str("0 0 0\n");
        out
    }
}

/// Reads an SMS triplet file into an exact integer matrix.
pub fn parse_sms(text: &str) -> Result<ExactMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, column: 1, message: "empty SMS file".into() })?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let bad = |line: usize, msg: &str| Error::Parse { line: line + 1, column: 1, message: msg.into() };
    if h.len() != 3 {
        return Err(bad(hl, "expected `rows cols M` header"));
    }
    let rows: usize = h[0].parse().map_err(|_| bad(hl, "bad row count"))?;
    let cols: usize = h[1].parse().map_err(|_| bad(hl, "bad column count"))?;
    let mut m = ExactMatrix::zeros(rows, cols);
    for (ln, line) in lines {
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 {
            return Err(bad(ln, "expected `i j value`"));
        }
        let i: usize = t[0].parse().map_err(|_| bad(ln, "bad row index"))?;
        let j: usize = t[1].parse().map_err(|_| bad(ln, "bad column index"))?;
        let v: i64 = t[2].parse().map_err(|_| bad(ln, "bad value"))?;
        if (i, j, v) == (0, 0, 0) {
            return Ok(m);
        }
        if i == 0 || j == 0 || i > rows || j > cols {
            return Err(bad(ln, "index out of range"));
        }
        m.set(i - 1, j - 1, v.into());
    }
    Err(Error::Parse { line: text.lines().count(), column: 1, message: "missing `0 0 0` terminator".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;

    #[test]
    fn single_triangle_column() {
        let fs = FaceSet::new(3, 2, [Simplex::new([0, 1, 2]).unwrap()]).unwrap();
        let m = boundary_matrix(&fs, Field::Q).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.column(0).len(), 3);
        // rows colex: 01, 02, 12
        assert_eq!(m.column(0), &[(0, 1), (1, -1), (2, 1)]);
    }

    #[test]
    fn k5_over_f2_has_rank_six() {
        let m = boundary_matrix(&complete_faces(5, 2).unwrap(), Field::F2).unwrap();
        assert_eq!((m.rows(), m.cols()), (10, 10));
        assert_eq!(m.rank(), 6);
    }

    #[test]
    fn sms_roundtrip() {
        let m = boundary_matrix(&complete_faces(5, 2).unwrap(), Field::Q).unwrap();
        let text = m.to_sms();
        assert!(text.starts_with("10 10 M\n"));
        assert!(text.ends_with("0 0 0\n"));
        assert_eq!(parse_sms(&text).unwrap(), m.to_exact());
        assert!(parse_sms("2 2 M\n1 1 1\n").is_err());
    }
}
