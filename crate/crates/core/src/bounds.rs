//! Closed-form extremal bounds, in exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::constructions::turan_edges;
use crate::error::{domain, Error, Result};

pub type Rational = Ratio<i128>;

fn sq4(m: u64) -> u64 {
    m * m / 4
}

/// `⌊n²/4⌋`: most edges in a triangle-free graph on `n` vertices.
pub fn mantel_bound(n: usize) -> u64 {
    sq4(n as u64)
}

/// `⌊(n-1)²/4⌋ + 1`: most edges in a non-bipartite triangle-free graph.
pub fn erdos_andrasfai_bound(n: usize) -> u64 {
    assert!(n >= 1, "defined for n >= 1");
    sq4(n as u64 - 1) + 1
}

/// `t_r(n) - ⌊n/r⌋ + 1`: most edges in a non-r-partite `K_{r+1}`-free graph.
pub fn brouwer_bound(n: usize, r: usize) -> Result<u64> {
    if r < 1 || r > n {
        return Err(domain(format!(
            "brouwer needs 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let t = turan_edges(n, r)?;
    Ok(t - (n / r) as u64 + 1)
}

/// `⌊(n-3)²/4⌋ + 5`: most edges in a triangle-free graph with `χ >= 4` once `n >= 90`.
pub fn chi4_bound(n: usize) -> u64 {
    assert!(n >= 4, "defined for n >= 4");
    sq4(n as u64 - 3) + 5
}

/// `⌊(n-4)²/4⌋ + 16`: most edges in a triangle-free graph with `d₂ >= 4`.
pub fn d2ge4_bound(n: usize) -> u64 {
    assert!(n >= 5, "defined for n >= 5");
    sq4(n as u64 - 4) + 16
}

/// The bounds the toolkit knows how to evaluate and verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    Mantel,
    ErdosAndrasfai,
    Brouwer,
    Chi4,
    D2ge4,
}

impl BoundId {
    pub const ALL: [BoundId; 5] = [
        BoundId::Mantel,
        BoundId::ErdosAndrasfai,
        BoundId::Brouwer,
        BoundId::Chi4,
        BoundId::D2ge4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Mantel => "mantel",
            BoundId::ErdosAndrasfai => "erdos_andrasfai",
            BoundId::Brouwer => "brouwer",
            BoundId::Chi4 => "chi4",
            BoundId::D2ge4 => "d2ge4",
        }
    }

    pub fn needs_r(self) -> bool {
        self == BoundId::Brouwer
    }

    /// Smallest `n` the closed form is defined for.
    pub fn min_n(self) -> usize {
        match self {
            BoundId::Mantel => 0,
            BoundId::ErdosAndrasfai | BoundId::Brouwer => 1,
            BoundId::Chi4 => 4,
            BoundId::D2ge4 => 5,
        }
    }

    /// Smallest `n` from which the bound is claimed.
    pub fn claimed_from(self) -> usize {
        match self {
            BoundId::Mantel => 0,
            BoundId::ErdosAndrasfai => 1,
            BoundId::Brouwer => 1,
            BoundId::Chi4 => 90,
            BoundId::D2ge4 => 90,
        }
    }

    pub fn evaluate(self, n: usize, r: Option<usize>) -> Result<u64> {
        if n < self.min_n() {
            return Err(domain(format!(
                "{} is defined for n >= {}",
                self.name(),
                self.min_n()
            )));
        }
        Ok(match self {
            BoundId::Mantel => mantel_bound(n),
            BoundId::ErdosAndrasfai => erdos_andrasfai_bound(n),
            BoundId::Brouwer => brouwer_bound(n, r.ok_or_else(|| domain("brouwer needs r"))?)?,
            BoundId::Chi4 => chi4_bound(n),
            BoundId::D2ge4 => d2ge4_bound(n),
        })
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == s || b.name().replace('_', "-") == s)
            .ok_or_else(|| domain(format!("unknown bound '{s}'")))
    }
}

/// Both sides of the C5 blow-up inequality and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl InequalityCheck {
    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// For part weights `z[0..5]` around a 5-cycle and `z0 <= min z[i]`, compares the sum of products
/// of non-adjacent weights `z1z3 + z2z4 + z3z5 + z4z1 + z5z2` with `(2Σz - 5z0)·z0`.
pub fn c5_blowup_inequality(z: [Rational; 5], z0: Rational) -> Result<InequalityCheck> {
    if z.iter().any(|zi| *zi <= Rational::zero()) {
        return Err(domain("weights z1..z5 must be positive"));
    }
    if z0 < Rational::zero() {
        return Err(domain("z0 must be nonnegative"));
    }
    if z.iter().any(|zi| *zi < z0) {
        return Err(domain("z0 exceeds min z_i"));
    }
    let lhs = (0..5)
        .map(|i| z[i] * z[(i + 2) % 5])
        .fold(Rational::zero(), |a, b| a + b);
    let total = z.iter().fold(Rational::zero(), |a, b| a + b);
    let rhs = (total * 2 - z0 * 5) * z0;
    Ok(InequalityCheck {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(mantel_bound(10), 25);
        assert_eq!(mantel_bound(0), 0);
        assert_eq!(mantel_bound(11), 30);
        assert_eq!(erdos_andrasfai_bound(5), 5);
        assert_eq!(erdos_andrasfai_bound(1), 1);
        assert_eq!(erdos_andrasfai_bound(11), 26);
        assert_eq!(brouwer_bound(10, 2).unwrap(), 21);
        assert_eq!(brouwer_bound(6, 3).unwrap(), 11);
        assert!(brouwer_bound(3, 4).is_err());
        assert_eq!(chi4_bound(11), 21);
        assert_eq!(chi4_bound(90), 1897);
        assert_eq!(chi4_bound(14), 35);
        assert_eq!(d2ge4_bound(24), 116);
        assert_eq!(d2ge4_bound(90), 1865);
        assert_eq!(d2ge4_bound(5), 16);
    }

    #[test]
    fn brouwer_r2_is_erdos_andrasfai() {
        for n in 2..=100 {
            assert_eq!(brouwer_bound(n, 2).unwrap(), erdos_andrasfai_bound(n));
        }
    }

    #[test]
    fn monotone_and_ordered() {
        for n in 5..10_000 {
            for b in [
                BoundId::Mantel,
                BoundId::ErdosAndrasfai,
                BoundId::Chi4,
                BoundId::D2ge4,
            ] {
                assert!(b.evaluate(n, None).unwrap() <= b.evaluate(n + 1, None).unwrap());
            }
            if n >= 90 {
                assert!(chi4_bound(n) < erdos_andrasfai_bound(n));
                assert!(erdos_andrasfai_bound(n) < mantel_bound(n));
                assert!(d2ge4_bound(n) < chi4_bound(n));
            }
        }
    }

    #[test]
    fn bound_ids_parse() {
        assert_eq!("chi4".parse::<BoundId>().unwrap(), BoundId::Chi4);
        assert_eq!(
            "erdos-andrasfai".parse::<BoundId>().unwrap(),
            BoundId::ErdosAndrasfai
        );
        assert!("nope".parse::<BoundId>().is_err());
        assert!(BoundId::Brouwer.evaluate(10, None).is_err());
        assert!(BoundId::Chi4.evaluate(3, None).is_err());
    }

    #[test]
    fn inequality_examples() {
        let c = c5_blowup_inequality([r(1); 5], r(1)).unwrap();
        assert_eq!((c.lhs, c.rhs), (r(5), r(5)));
        assert!(c.holds && c.is_equality());
        let c = c5_blowup_inequality([r(2), r(1), r(1), r(1), r(1)], r(1)).unwrap();
        assert_eq!((c.lhs, c.rhs), (r(7), r(7)));
        let c = c5_blowup_inequality([r(3), r(1), r(4), r(1), r(5)], r(0)).unwrap();
        assert_eq!(c.rhs, r(0));
        assert!(c.holds && !c.is_equality());
        assert!(c5_blowup_inequality([r(1); 5], r(2)).is_err());
        assert!(c5_blowup_inequality([r(0), r(1), r(1), r(1), r(1)], r(0)).is_err());
    }
}
