use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::RamseyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    /// `1..=n`
    Interval { n: u64 },
    /// `prod_i 1..=dims[i]`, first axis most significant
    Grid { dims: Vec<u64> },
}

impl Domain {
    pub fn len(&self) -> usize {
        match self {
            Domain::Interval { n } => *n as usize,
            Domain::Grid { dims } => dims.iter().map(|&d| d as usize).product(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A partition of a finite domain into `count` parts, numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    domain: Domain,
    count: u32,
    colors: Vec<u32>,
}

const MAX_CELLS: usize = 1 << 24;

impl Coloring {
    pub fn new(domain: Domain, count: u32, colors: Vec<u32>) -> Result<Self, RamseyError> {
        if domain.len() > MAX_CELLS {
            return Err(RamseyError::TooLarge(format!("domain has {} cells", domain.len())));
        }
        if colors.len() != domain.len() {
            return Err(RamseyError::Invalid(format!(
                "{} colors for a domain of {} elements",
                colors.len(),
                domain.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= count) {
            return Err(RamseyError::Invalid(format!("color {c} outside 0..{count}")));
        }
        Ok(Coloring { domain, count, colors })
    }

    /// Colors `1..=n` by `f`.
    pub fn interval_from_fn(n: u64, count: u32, f: impl Fn(u64) -> u32) -> Result<Self, RamseyError> {
        Coloring::new(Domain::Interval { n }, count, (1..=n).map(f).collect())
    }

    /// `1..=n` split into the listed parts, which must cover it exactly once.
    pub fn from_parts(n: u64, parts: &[Vec<u64>]) -> Result<Self, RamseyError> {
        let mut colors = vec![u32::MAX; n as usize];
        for (c, part) in parts.iter().enumerate() {
            for &x in part {
                if x == 0 || x > n {
                    return Err(RamseyError::Invalid(format!("{x} outside 1..={n}")));
                }
                if colors[x as usize - 1] != u32::MAX {
                    return Err(RamseyError::Invalid(format!("{x} listed twice")));
                }
                colors[x as usize - 1] = c as u32;
            }
        }
        if let Some(i) = colors.iter().position(|&c| c == u32::MAX) {
            return Err(RamseyError::Invalid(format!("{} has no part", i + 1)));
        }
        Coloring::new(Domain::Interval { n }, parts.len() as u32, colors)
    }

    /// `(element, color)` pairs covering `1..=n`; the number of colors is
    /// one more than the largest used.
    pub fn from_pairs(pairs: &[(u64, u32)]) -> Result<Self, RamseyError> {
        let n = pairs.len() as u64;
        let mut colors = vec![u32::MAX; pairs.len()];
        for &(x, c) in pairs {
            if x == 0 || x > n {
                return Err(RamseyError::Invalid(format!("element {x} outside 1..={n}")));
            }
            if colors[x as usize - 1] != u32::MAX {
                return Err(RamseyError::Invalid(format!("element {x} listed twice")));
            }
            colors[x as usize - 1] = c;
        }
        let count = colors.iter().max().map_or(1, |&c| c + 1);
        Coloring::new(Domain::Interval { n }, count, colors)
    }

    pub fn single(n: u64) -> Self {
        Coloring::interval_from_fn(n, 1, |_| 0).expect("valid")
    }

    /// Odd numbers get color 0, even numbers color 1.
    pub fn parity(n: u64) -> Self {
        Coloring::interval_from_fn(n, 2, |x| (1 - x % 2) as u32).expect("valid")
    }

    pub fn residue(n: u64, k: u32) -> Result<Self, RamseyError> {
        if k == 0 {
            return Err(RamseyError::Invalid("modulus must be positive".into()));
        }
        Coloring::interval_from_fn(n, k, |x| (x % k as u64) as u32)
    }

    pub fn random(n: u64, count: u32, seed: u64) -> Result<Self, RamseyError> {
        if count == 0 {
            return Err(RamseyError::Invalid("need at least one color".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors = (0..n).map(|_| rng.gen_range(0..count)).collect();
        Coloring::new(Domain::Interval { n }, count, colors)
    }

    /// Colors the grid `prod 1..=dims[i]` by `f` of the coordinates.
    pub fn grid_from_fn(dims: &[u64], count: u32, f: impl Fn(&[u64]) -> u32) -> Result<Self, RamseyError> {
        let domain = Domain::Grid { dims: dims.to_vec() };
        let total = domain.len();
        if total > MAX_CELLS {
            return Err(RamseyError::TooLarge(format!("grid has {total} cells")));
        }
        let mut colors = Vec::with_capacity(total);
        let mut point = vec![1u64; dims.len()];
        for _ in 0..total {
            colors.push(f(&point));
            for i in (0..dims.len()).rev() {
                point[i] += 1;
                if point[i] <= dims[i] {
                    break;
                }
                point[i] = 1;
            }
        }
        Coloring::new(domain, count, colors)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// `n` for an interval domain.
    pub fn interval_len(&self) -> Result<u64, RamseyError> {
        match self.domain {
            Domain::Interval { n } => Ok(n),
            Domain::Grid { .. } => Err(RamseyError::Invalid("an interval coloring is required".into())),
        }
    }

    /// Color of `x`, or `None` outside the domain.
    #[inline]
    pub fn color(&self, x: u64) -> Option<u32> {
        if x == 0 {
            return None;
        }
        self.colors.get(x as usize - 1).copied().filter(|_| matches!(self.domain, Domain::Interval { .. }))
    }

    /// Color of a grid point, or `None` outside the grid.
    pub fn grid_color(&self, point: &[u64]) -> Option<u32> {
        let Domain::Grid { dims } = &self.domain else {
            return None;
        };
        if point.len() != dims.len() {
            return None;
        }
        let mut idx = 0usize;
        for (&p, &d) in point.iter().zip(dims) {
            if p == 0 || p > d {
                return None;
            }
            idx = idx * d as usize + (p - 1) as usize;
        }
        Some(self.colors[idx])
    }

    /// The elements of each part.
    pub fn parts(&self) -> Vec<Vec<u64>> {
        let mut parts = vec![Vec::new(); self.count as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            parts[c as usize].push(i as u64 + 1);
        }
        parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let c = Coloring::from_parts(5, &[vec![1, 4], vec![2, 3, 5]]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 1, 0, 1]);
        assert_eq!(c.parts(), vec![vec![1, 4], vec![2, 3, 5]]);
        assert_eq!(c.color(6), None);
        assert!(Coloring::from_parts(3, &[vec![1, 2]]).is_err());
        assert!(Coloring::from_parts(2, &[vec![1, 2], vec![2]]).is_err());
        let p = Coloring::from_pairs(&[(2, 1), (1, 0), (3, 2)]).unwrap();
        assert_eq!(p.count(), 3);
        assert_eq!(Coloring::parity(4).colors(), &[0, 1, 0, 1]);
        assert_eq!(Coloring::random(50, 3, 9).unwrap(), Coloring::random(50, 3, 9).unwrap());

        let g = Coloring::grid_from_fn(&[2, 3], 2, |p| ((p[0] + p[1]) % 2) as u32).unwrap();
        assert_eq!(g.colors(), &[0, 1, 0, 1, 0, 1]);
        assert_eq!(g.grid_color(&[2, 3]), Some(1));
        assert_eq!(g.grid_color(&[3, 1]), None);
        assert!(g.interval_len().is_err());
    }
}
