//! Exact rational matrices and canonical subspaces.
//!
//! Entries are arbitrary-precision rationals kept in lowest terms; there is
//! no floating point anywhere in the crate. Subspaces are stored as bases in
//! reduced row-echelon form, so equal subspaces compare equal structurally.
//!
//! Matrix JSON: `{"rows": [["p/q", ...], ...]}` with rationals as strings in
//! lowest terms; vectors are single-row matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d` in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`; rejects zero denominators instead of panicking.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>, // row-major
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<RatMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("integer literals form a rectangle")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> RatMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    fn check_same_shape(&self, other: &RatMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn pow(&self, mut e: u64) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut base = self.clone();
        let mut acc = RatMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(src * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = m.get(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &factor * m.get(pivot_row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space as a canonical subspace.
    pub fn kernel(&self) -> RatSubspace {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -rref.get(prow, f).clone();
            }
            basis.push(v);
        }
        RatSubspace::from_spanning(self.cols, &basis).expect("kernel vectors share the ambient")
    }

    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if src != col {
                for c in 0..n {
                    m.data.swap(src * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        self.sub(&RatMatrix::identity(self.rows))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: Vec<Vec<String>>,
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        MatrixRepr { rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let mut rows = Vec::with_capacity(repr.rows.len());
        for row in &repr.rows {
            let parsed: Result<Vec<Rat>> = row.iter().map(|s| rat_from_str(s)).collect();
            rows.push(parsed.map_err(D::Error::custom)?);
        }
        RatMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// A linear subspace of `Q^ambient` with its canonical echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatSubspace {
    ambient: usize,
    basis: RatMatrix, // in reduced row-echelon form, no zero rows
}

impl RatSubspace {
    pub fn zero(ambient: usize) -> RatSubspace {
        RatSubspace { ambient, basis: RatMatrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> RatSubspace {
        RatSubspace { ambient, basis: RatMatrix::identity(ambient) }
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rat>]) -> Result<RatSubspace> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient {}",
                    v.len(),
                    ambient
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(RatSubspace::zero(ambient));
        }
        let (rref, pivots) = RatMatrix::from_rows(vectors.to_vec())?.rref();
        let rows = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        Ok(RatSubspace { ambient, basis: RatMatrix::from_rows(rows)? })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut v = v.to_vec();
        for r in 0..self.basis.rows() {
            let lead = self.basis.row(r).iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for c in 0..self.ambient {
                    let x = &v[c] - &factor * self.basis.get(r, c);
                    v[c] = x;
                }
            }
        }
        v.iter().all(Rat::is_zero)
    }

    pub fn is_subspace_of(&self, other: &RatSubspace) -> bool {
        self.ambient == other.ambient
            && (0..self.basis.rows()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &RatSubspace) -> Result<RatSubspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let mut vectors = self.basis.row_vecs();
        vectors.extend(other.basis.row_vecs());
        RatSubspace::from_spanning(self.ambient, &vectors)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient: usize,
    basis: RatMatrix,
}

impl Serialize for RatSubspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr { ambient: self.ambient, basis: self.basis.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatSubspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SubspaceRepr::deserialize(deserializer)?;
        if repr.basis.cols() != repr.ambient && repr.basis.rows() > 0 {
            return Err(D::Error::custom("basis width does not match ambient dimension"));
        }
        RatSubspace::from_spanning(repr.ambient, &repr.basis.row_vecs()).map_err(D::Error::custom)
    }
}

/// Determinant is `1` or `-1`.
pub fn is_unimodular(det: &Rat) -> bool {
    det.abs() == Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = RatMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let (rref, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(rref.row(0), &[rat(1), rat(0), rat(-1)][..]);
        assert_eq!(rref.row(1), &[rat(0), rat(1), rat(2)][..]);
    }

    #[test]
    fn kernel_is_canonical() {
        let m = RatMatrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[rat(1), rat(-1), rat(0)][..]);
        assert!(k.contains(&[rat(-2), rat(2), rat(0)]));
        assert!(!k.contains(&[rat(1), rat(1), rat(0)]));
    }

    #[test]
    fn det_and_pow() {
        let rot = RatMatrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(rot.det().unwrap(), rat(1));
        assert_eq!(rot.pow(4).unwrap(), RatMatrix::identity(2));
        assert_eq!(rot.pow(0).unwrap(), RatMatrix::identity(2));
        let singular = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det().unwrap(), rat(0));
        assert!(is_unimodular(&rat(-1)));
        assert!(!is_unimodular(&ratio(1, 2)));
    }

    #[test]
    fn subspace_operations() {
        let e1 = vec![rat(1), rat(0), rat(0)];
        let e2 = vec![rat(0), rat(1), rat(0)];
        let mixed = vec![rat(2), rat(2), rat(0)];
        let s = RatSubspace::from_spanning(3, &[e1.clone(), mixed]).unwrap();
        let t = RatSubspace::from_spanning(3, &[e1, e2]).unwrap();
        assert_eq!(s, t); // canonical bases agree
        assert_eq!(s.dim(), 2);
        assert!(s.is_subspace_of(&RatSubspace::full(3)));
        assert!(RatSubspace::zero(3).is_subspace_of(&s));
        let sum = s.sum(&RatSubspace::zero(3)).unwrap();
        assert_eq!(sum, s);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_from_str("3/6").unwrap(), ratio(1, 2));
        assert_eq!(rat_from_str("-4").unwrap(), rat(-4));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
        assert_eq!(ratio(-4, 6).to_string(), "-2/3");
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = RatMatrix::from_rows(vec![vec![ratio(1, 2), rat(-3)], vec![rat(0), rat(7)]])
            .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"rows":[["1/2","-3"],["0","7"]]}"#);
        let back: RatMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<RatMatrix>(r#"{"rows":[["1/0"]]}"#).is_err());
    }
}
