use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{input, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| crate::Error::Input(format!("bad rational `{s}`")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| crate::Error::Input(format!("bad rational `{s}`")))?;
    if q.is_zero() {
        return input(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(p, q))
}

/// Formats as `"p/q"` in lowest terms with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A dense `rows × cols` matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return input("ragged matrix rows");
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// `Q y`, of length `rows`.
    pub fn mul_vec(&self, y: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(y.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !y[j].is_zero())
                    .fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &y[j])
            })
            .collect()
    }

    /// `Qᵀ x`, of length `cols`.
    pub fn tmul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(x.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .filter(|&i| !x[i].is_zero())
                    .fold(Rational::zero(), |acc, i| acc + self.get(i, j) * &x[i])
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn all_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
