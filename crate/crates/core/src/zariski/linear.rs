use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ZariskiError;
use crate::algebras::int_to_json;

/// Integer basis of the group terms `k_1 x_1 + .. + k_n x_n + c` over `Z`
/// that vanish at every point of `points`. Each vector is
/// `(k_1, .., k_n, c)`, primitive, with first nonzero entry positive.
pub fn vanishing_affine_terms(points: &[Vec<i64>]) -> Result<Vec<Vec<BigInt>>, ZariskiError> {
    let Some(first) = points.first() else {
        return Err(ZariskiError::Invalid("no points given".into()));
    };
    let n = first.len();
    if points.iter().any(|p| p.len() != n) {
        return Err(ZariskiError::Invalid("points of different dimensions".into()));
    }
    let cols = n + 1;
    let mut rows: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .chain(std::iter::once(BigRational::one()))
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let lead = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = &*v / &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..cols {
                    let d = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[i][free].clone();
        }
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !g.is_zero() {
            for x in ints.iter_mut() {
                *x = &*x / &g;
            }
        }
        if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        basis.push(ints);
    }
    Ok(basis)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineClosure {
    #[serde(serialize_with = "basis_json")]
    pub vanishing: Vec<Vec<BigInt>>,
    pub closure: Vec<Vec<i64>>,
    pub window_size: usize,
    pub full_window: bool,
}

fn basis_json<S: serde::Serializer>(b: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Vec<serde_json::Value>> = b.iter().map(|v| v.iter().map(int_to_json).collect()).collect();
    vals.serialize(s)
}

/// Points of `window` lying in every root set of a group term that vanishes
/// on `points`, i.e. the closure of `points` within the window under single
/// root sets of degree-1 terms.
pub fn affine_closure_in_window(points: &[Vec<i64>], window: &[Vec<i64>]) -> Result<AffineClosure, ZariskiError> {
    let basis = vanishing_affine_terms(points)?;
    let n = points[0].len();
    if window.iter().any(|p| p.len() != n) {
        return Err(ZariskiError::Invalid("window point of the wrong dimension".into()));
    }
    let closure: Vec<Vec<i64>> = window
        .iter()
        .filter(|p| {
            basis.iter().all(|v| {
                let s: BigInt = p.iter().zip(v).map(|(&x, k)| k * x).sum::<BigInt>() + &v[n];
                s.is_zero()
            })
        })
        .cloned()
        .collect();
    Ok(AffineClosure {
        full_window: closure.len() == window.len(),
        window_size: window.len(),
        vanishing: basis,
        closure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola_has_no_vanishing_line() {
        let pts: Vec<Vec<i64>> = (0..3).map(|a| vec![a, a * a]).collect();
        assert!(vanishing_affine_terms(&pts).unwrap().is_empty());
        let window: Vec<Vec<i64>> = (-3..=3).flat_map(|x| (-3..=9).map(move |y| vec![x, y])).collect();
        let c = affine_closure_in_window(&pts, &window).unwrap();
        assert!(c.full_window);
    }

    #[test]
    fn collinear_points() {
        let pts = vec![vec![0, 1], vec![1, 3], vec![2, 5]];
        let b = vanishing_affine_terms(&pts).unwrap();
        // y = 2x + 1, i.e. 2x - y + 1 = 0
        assert_eq!(b, vec![vec![BigInt::from(2), BigInt::from(-1), BigInt::from(1)]]);
        let window: Vec<Vec<i64>> = (0..4).flat_map(|x| (0..10).map(move |y| vec![x, y])).collect();
        let c = affine_closure_in_window(&pts, &window).unwrap();
        assert_eq!(c.closure, vec![vec![0, 1], vec![1, 3], vec![2, 5], vec![3, 7]]);
        // a single point leaves a two-dimensional family
        assert_eq!(vanishing_affine_terms(&[vec![4, 5]]).unwrap().len(), 2);
    }
}
