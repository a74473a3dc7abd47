//! Compositions, partitions, dominance order, parity classes and the
//! parity collapse of a partition.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default bound for exhaustive partition enumeration.
pub const ENUM_BOUND: u32 = 30;

/// An ordered tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("composition", "parts must be positive"));
        }
        Ok(Composition { parts })
    }
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition", "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
    /// Build from exponent notation `[(base, multiplicity), ...]` with
    /// strictly decreasing bases.
    pub fn from_exponents(pairs: &[(u32, u32)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(b, k) in pairs {
            for _ in 0..k {
                parts.push(b);
            }
        }
        Partition::new(parts)
    }
    /// Exponent notation: distinct parts with multiplicities, decreasing.
    pub fn exponents(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((b, k)) if *b == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
    /// Part at 1-based index `i`, zero beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }
    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (b, k)) in self.exponents().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *k == 1 {
                write!(f, "{b}")?;
            } else {
                write!(f, "{b}^{k}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The parity class parameter: `Plus` is the orthogonal side, `Minus` the
/// symplectic side.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ParityClass {
    Plus,
    Minus,
}

impl ParityClass {
    pub fn sign(self) -> i32 {
        match self {
            ParityClass::Plus => 1,
            ParityClass::Minus => -1,
        }
    }
    pub fn from_sign(s: i32) -> Result<Self> {
        match s {
            1 => Ok(ParityClass::Plus),
            -1 => Ok(ParityClass::Minus),
            _ => Err(Error::invalid("parity class", format!("{s} is not +1 or -1"))),
        }
    }
    /// Whether a part of value `p` satisfies `eps * (-1)^p = 1`. Zero counts
    /// as an (even) part here, matching the convention that partitions are
    /// padded with zeros.
    fn matches_parity(self, p: u32) -> bool {
        match self {
            ParityClass::Plus => p % 2 == 0,
            ParityClass::Minus => p % 2 == 1,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::Plus => write!(f, "+1"),
            ParityClass::Minus => write!(f, "-1"),
        }
    }
}

/// Does the tuple read the same reversed?
pub fn is_symmetric(c: &Composition) -> bool {
    let p = c.parts();
    (0..p.len() / 2).all(|i| p[i] == p[p.len() - 1 - i])
}

/// Dual partition: the i-th dual part counts parts of size at least i.
pub fn dual(c: &Composition) -> Partition {
    let max = *c.parts().iter().max().unwrap();
    let parts: Vec<u32> =
        (1..=max).map(|i| c.parts().iter().filter(|&&a| a >= i).count() as u32).collect();
    Partition::new(parts).expect("dual is weakly decreasing")
}

/// Dominance order: `a` is dominated by `b` when every prefix sum of `a` is
/// at most the corresponding prefix sum of `b`. Requires equal totals.
pub fn dominates(a: &Partition, b: &Partition) -> Result<bool> {
    if a.total() != b.total() {
        return Err(Error::IncomparableTotals(a.total(), b.total()));
    }
    let n = a.len().max(b.len());
    let mut sa = 0u64;
    let mut sb = 0u64;
    for i in 1..=n {
        sa += a.part(i) as u64;
        sb += b.part(i) as u64;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict dominance.
pub fn strictly_dominates(a: &Partition, b: &Partition) -> Result<bool> {
    Ok(a != b && dominates(a, b)?)
}

/// Membership in the parity class: for the symplectic side every odd part
/// must have even multiplicity, for the orthogonal side every even part.
pub fn in_parity_class(a: &Partition, eps: ParityClass) -> bool {
    a.exponents().iter().all(|&(b, k)| {
        let constrained = match eps {
            ParityClass::Minus => b % 2 == 1,
            ParityClass::Plus => b % 2 == 0,
        };
        !constrained || k % 2 == 0
    })
}

/// All parts even (which forces membership in the orthogonal class).
pub fn is_very_even(a: &Partition) -> bool {
    a.parts().iter().all(|&p| p % 2 == 0) && in_parity_class(a, ParityClass::Plus)
}

/// The unique maximal element of the parity class dominated by `a`,
/// computed by the step-by-step unit-moving algorithm.
///
/// Panics when the parity class of the total is empty, which happens
/// exactly for the symplectic class of an odd number.
pub fn collapse(a: &Partition, eps: ParityClass) -> Partition {
    assert!(
        !(eps == ParityClass::Minus && a.total() % 2 == 1),
        "the symplectic parity class of an odd number is empty"
    );
    let mut parts = a.parts().to_vec();
    loop {
        if in_parity_class(&Partition { parts: parts.clone() }, eps) {
            return Partition::new(parts).expect("collapse keeps a partition");
        }
        // m: longest prefix lying in the parity class (as a partition of its sum)
        let mut m = 0usize;
        for i in 1..=parts.len() {
            let prefix = Partition { parts: parts[..i].to_vec() };
            if in_parity_class(&prefix, eps) {
                m = i;
            }
        }
        let a_m1 = parts[m]; // a_{m+1} in 1-based terms
        debug_assert!(eps.matches_parity(a_m1));
        debug_assert!(a_m1 > if m + 1 < parts.len() { parts[m + 1] } else { 0 });
        // l: first index >= m+2 whose part (zero-padded) has the right parity
        let mut l = m + 1; // 0-based candidate start = m+1 (1-based m+2)
        loop {
            let val = if l < parts.len() { parts[l] } else { 0 };
            if eps.matches_parity(val) {
                break;
            }
            l += 1;
            assert!(l <= parts.len(), "parity collapse: no index to raise");
        }
        parts[m] -= 1;
        if l < parts.len() {
            parts[l] += 1;
        } else {
            parts.push(1);
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }
}

/// All partitions of `d` in decreasing lexicographic order, optionally
/// filtered to a parity class.
pub fn enumerate_partitions(
    d: u32,
    eps: Option<ParityClass>,
    bound: u32,
) -> Result<Vec<Partition>> {
    if d == 0 || d > bound {
        return Err(Error::EnumerationBound { d, bound });
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let hi = max.min(remaining);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(d, d, &mut cur, &mut out);
    if let Some(eps) = eps {
        out.retain(|p| in_parity_class(p, eps));
    }
    Ok(out)
}

/// All symmetric compositions of `d` (including the trivial one).
pub fn enumerate_symmetric_compositions(d: u32, bound: u32) -> Result<Vec<Composition>> {
    if d == 0 || d > bound {
        return Err(Error::EnumerationBound { d, bound });
    }
    // A symmetric composition is determined by its first half (h_1, ..., h_q)
    // of arbitrary positive entries with 2*(h_1+...+h_q) <= d, together with a
    // middle part d - 2*sum when positive.
    let mut out = Vec::new();
    let mut half: Vec<u32> = Vec::new();
    fn rec(d: u32, sum2: u32, half: &mut Vec<u32>, out: &mut Vec<Composition>) {
        let mid = d - sum2;
        // close off with or without a middle part
        let mut parts = half.clone();
        if mid > 0 {
            parts.push(mid);
        }
        parts.extend(half.iter().rev());
        if !parts.is_empty() {
            out.push(Composition { parts });
        }
        // extend the half
        let mut next = 1;
        while sum2 + 2 * next <= d {
            half.push(next);
            rec(d, sum2 + 2 * next, half, out);
            half.pop();
            next += 1;
        }
    }
    rec(d, 0, &mut half, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&c(&[1, 4, 1])));
        assert!(!is_symmetric(&c(&[2, 1])));
        assert!(is_symmetric(&c(&[6])));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&c(&[1, 4, 1])), p(&[3, 1, 1, 1]));
        assert_eq!(dual(&c(&[1, 5, 1])), p(&[3, 1, 1, 1, 1]));
        assert_eq!(dual(&c(&[4, 4])), p(&[2, 2, 2, 2]));
    }

    #[test]
    fn dual_is_involutive_on_partitions() {
        for d in 1..=10 {
            for a in enumerate_partitions(d, None, ENUM_BOUND).unwrap() {
                assert_eq!(dual(&dual(&a.as_composition()).as_composition()), a);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[2, 2, 1, 1]), &p(&[3, 1, 1, 1])).unwrap());
        assert!(dominates(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(!dominates(&p(&[3, 1, 1, 1]), &p(&[2, 2, 1, 1])).unwrap());
        assert!(matches!(
            dominates(&p(&[2]), &p(&[1, 1, 1])),
            Err(Error::IncomparableTotals(2, 3))
        ));
    }

    #[test]
    fn parity_class_examples() {
        assert!(in_parity_class(&p(&[2, 2, 1, 1]), ParityClass::Minus));
        assert!(!in_parity_class(&p(&[3, 1, 1, 1]), ParityClass::Minus));
        assert!(in_parity_class(&p(&[3, 1, 1, 1, 1]), ParityClass::Plus));
    }

    #[test]
    fn very_even_examples() {
        assert!(is_very_even(&p(&[2, 2, 2, 2])));
        assert!(!is_very_even(&p(&[2, 2, 1, 1])));
        assert!(!is_very_even(&p(&[4, 2, 2])));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p(&[3, 1, 1, 1]), ParityClass::Minus), p(&[2, 2, 1, 1]));
        let a = p(&[2, 2, 1, 1]);
        assert_eq!(collapse(&a, ParityClass::Minus), a);
        assert_eq!(collapse(&p(&[4, 2, 2]), ParityClass::Plus), p(&[3, 3, 1, 1]));
        // runs of equal parts exercise the long-prefix branch
        assert_eq!(collapse(&p(&[2, 2, 2]), ParityClass::Plus), p(&[2, 2, 1, 1]));
    }

    /// Brute-force oracle: maximum of the parity class under dominance.
    fn collapse_oracle(a: &Partition, eps: ParityClass) -> Partition {
        let candidates: Vec<Partition> = enumerate_partitions(a.total(), Some(eps), ENUM_BOUND)
            .unwrap()
            .into_iter()
            .filter(|b| dominates(b, a).unwrap())
            .collect();
        let mut best: Option<Partition> = None;
        for b in candidates {
            best = Some(match best {
                None => b,
                Some(cur) => {
                    if dominates(&cur, &b).unwrap() {
                        b
                    } else {
                        assert!(dominates(&b, &cur).unwrap(), "class maximum must exist");
                        cur
                    }
                }
            });
        }
        best.expect("parity class below a is never empty")
    }

    #[test]
    fn collapse_matches_oracle_small() {
        for d in 1..=9 {
            for eps in [ParityClass::Plus, ParityClass::Minus] {
                if eps == ParityClass::Minus && d % 2 == 1 {
                    continue; // the symplectic class of an odd number is empty
                }
                for a in enumerate_partitions(d, None, ENUM_BOUND).unwrap() {
                    let got = collapse(&a, eps);
                    assert!(in_parity_class(&got, eps));
                    assert!(dominates(&got, &a).unwrap());
                    assert_eq!(got, collapse_oracle(&a, eps), "collapse of {a} eps={eps}");
                    // idempotent
                    assert_eq!(collapse(&got, eps), got);
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let ps = enumerate_partitions(3, None, ENUM_BOUND).unwrap();
        assert_eq!(ps, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let ps = enumerate_partitions(4, Some(ParityClass::Plus), ENUM_BOUND).unwrap();
        assert_eq!(ps, vec![p(&[3, 1]), p(&[2, 2]), p(&[1, 1, 1, 1])]);
        let ps = enumerate_partitions(4, Some(ParityClass::Minus), ENUM_BOUND).unwrap();
        assert_eq!(ps, vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert!(enumerate_partitions(31, None, ENUM_BOUND).is_err());
    }

    #[test]
    fn symmetric_compositions_of_7() {
        let cs = enumerate_symmetric_compositions(7, ENUM_BOUND).unwrap();
        let nontrivial: Vec<_> = cs.iter().filter(|c| !c.is_trivial()).collect();
        assert_eq!(nontrivial.len(), 7);
        for want in [
            c(&[1, 5, 1]),
            c(&[2, 3, 2]),
            c(&[3, 1, 3]),
            c(&[1, 1, 3, 1, 1]),
            c(&[1, 2, 1, 2, 1]),
            c(&[2, 1, 1, 1, 2]),
            c(&[1, 1, 1, 1, 1, 1, 1]),
        ] {
            assert!(cs.contains(&want), "missing {want}");
        }
    }

    #[test]
    fn exponent_roundtrip() {
        let a = p(&[5, 5, 3, 1, 1, 1]);
        assert_eq!(Partition::from_exponents(&a.exponents()).unwrap(), a);
        assert_eq!(format!("{a}"), "[5^2,3,1^3]");
    }
}
