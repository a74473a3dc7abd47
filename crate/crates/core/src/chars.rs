//! Formal characters: weight multisets of representations of a reductive
//! type, with product, symmetric powers, decomposition into irreducibles
//! and pushforward along a Cartan restriction map.

use crate::error::{Error, Result};
use crate::rootdata::{factor_data, ReductiveType, Weight};
use crate::scalar::{Rat, Scalar};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// Default cap on the dimension of a single irreducible character.
pub const DIM_BOUND: u64 = 200_000;

/// Finite multiset of weights with positive multiplicities. Weight keys use
/// doubled coordinates, as everywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalCharacter {
    pub coord_len: usize,
    pub weights: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn zero(coord_len: usize) -> Self {
        FormalCharacter { coord_len, weights: BTreeMap::new() }
    }
    pub fn trivial(t: &ReductiveType) -> Self {
        let mut ch = FormalCharacter::zero(t.coord_len());
        ch.add_weight(vec![0; t.coord_len()], 1);
        ch
    }
    pub fn from_weights<I: IntoIterator<Item = (Vec<i64>, i64)>>(coord_len: usize, it: I) -> Self {
        let mut ch = FormalCharacter::zero(coord_len);
        for (w, m) in it {
            ch.add_weight(w, m);
        }
        ch
    }
    pub fn add_weight(&mut self, w: Vec<i64>, m: i64) {
        assert_eq!(w.len(), self.coord_len);
        let e = self.weights.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            let k: Vec<Vec<i64>> =
                self.weights.iter().filter(|(_, &v)| v == 0).map(|(k, _)| k.clone()).collect();
            for k in k {
                self.weights.remove(&k);
            }
        }
    }
    pub fn total(&self) -> i64 {
        self.weights.values().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }
    /// Pointwise product (character of the tensor product).
    pub fn product(&self, o: &FormalCharacter) -> FormalCharacter {
        assert_eq!(self.coord_len, o.coord_len);
        let mut out = FormalCharacter::zero(self.coord_len);
        for (w1, m1) in &self.weights {
            for (w2, m2) in &o.weights {
                let w: Vec<i64> = w1.iter().zip(w2).map(|(&a, &b)| a + b).collect();
                out.add_weight(w, m1 * m2);
            }
        }
        out
    }
    /// Adams operation: scale every weight by `k`.
    pub fn adams(&self, k: i64) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.coord_len);
        for (w, m) in &self.weights {
            out.add_weight(w.iter().map(|&x| k * x).collect(), *m);
        }
        out
    }
    /// Dual character: negate every weight.
    pub fn dual(&self) -> FormalCharacter {
        self.adams(-1)
    }
}

/// Dimension of the irreducible with highest weight `lam` (torus ignored).
pub fn weyl_dim(t: &ReductiveType, lam: &Weight) -> Result<u64> {
    let mut dim: u64 = 1;
    for (fi, (off, rank)) in t.factor_spans().into_iter().enumerate() {
        let fd = factor_data(t.factors[fi]);
        let coords = plain_factor_coords(lam, off, rank)?;
        dim = dim
            .checked_mul(fd.weyl_dim(&coords)?)
            .ok_or_else(|| Error::invalid("weight", "dimension overflow"))?;
    }
    Ok(dim)
}

fn plain_factor_coords(lam: &Weight, off: usize, rank: usize) -> Result<Vec<i64>> {
    lam.0[off..off + rank]
        .iter()
        .map(|&c| {
            if c % 2 != 0 {
                Err(Error::invalid(
                    "weight",
                    "semisimple coordinates must be integral (doubled-even)",
                ))
            } else {
                Ok(c / 2)
            }
        })
        .collect()
}

/// Full weight multiset of the irreducible with highest weight `lam`.
pub fn formal_character(t: &ReductiveType, lam: &Weight) -> Result<FormalCharacter> {
    formal_character_bounded(t, lam, DIM_BOUND)
}

pub fn formal_character_bounded(
    t: &ReductiveType,
    lam: &Weight,
    bound: u64,
) -> Result<FormalCharacter> {
    if !lam.is_dominant(t) {
        return Err(Error::invalid("weight", "highest weight must be dominant"));
    }
    let dim = weyl_dim(t, lam)?;
    if dim > bound {
        return Err(Error::DimensionBound { dim, bound });
    }
    // factor-wise weight lists, then the product distribution
    let mut partial: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), 1)];
    for (fi, (off, rank)) in t.factor_spans().into_iter().enumerate() {
        let fd = factor_data(t.factors[fi]);
        let coords = plain_factor_coords(lam, off, rank)?;
        let ws = fd.weights_of_irrep(&coords)?;
        let mut next = Vec::with_capacity(partial.len() * ws.len());
        for (prefix, m0) in &partial {
            for (w, m) in &ws {
                let mut v = prefix.clone();
                v.extend(w.iter().map(|&x| 2 * x));
                next.push((v, m0 * m));
            }
        }
        partial = next;
    }
    let torus: Vec<i64> = lam.0[t.torus_offset()..].to_vec();
    let mut ch = FormalCharacter::zero(t.coord_len());
    for (mut w, m) in partial {
        w.extend(torus.iter().copied());
        ch.add_weight(w, m);
    }
    debug_assert_eq!(ch.total() as u64, dim);
    Ok(ch)
}

/// Decompose a genuine representation character into highest weights by
/// repeatedly peeling the maximal (height, then lexicographic) weight.
pub fn decompose(t: &ReductiveType, ch: &FormalCharacter) -> Result<Vec<(Weight, i64)>> {
    let mut rest = ch.clone();
    let mut out: Vec<(Weight, i64)> = Vec::new();
    let mut cache: HashMap<Vec<i64>, FormalCharacter> = HashMap::new();
    // root-coordinate height functional: positive on every positive root,
    // so its maximizers in the support are highest weights
    let height_vec = root_height_functional(t);
    let height = |w: &[i64]| -> Rat {
        let mut acc = Rat::zero();
        for (i, &wi) in w[..t.semisimple_rank()].iter().enumerate() {
            if wi != 0 {
                acc += <Rat as Scalar>::from_i64(wi) * height_vec[i].clone();
            }
        }
        acc
    };
    while !rest.is_zero() {
        let (peak, mult) = {
            let (w, m) = rest
                .weights
                .iter()
                .max_by_key(|(w, _)| (height(w), (*w).clone()))
                .expect("nonzero character has a maximal weight");
            (Weight(w.clone()), *m)
        };
        if mult < 0 || !peak.is_dominant(t) {
            return Err(Error::NotARepresentationCharacter(peak.display(t)));
        }
        let irr = match cache.get(&peak.0) {
            Some(c) => c.clone(),
            None => {
                let c = formal_character_bounded(t, &peak, u64::MAX)?;
                cache.insert(peak.0.clone(), c.clone());
                c
            }
        };
        for (w, m) in &irr.weights {
            rest.add_weight(w.clone(), -mult * m);
        }
        if rest.weights.values().any(|&m| m < 0) {
            return Err(Error::NotARepresentationCharacter(peak.display(t)));
        }
        out.push((peak, mult));
    }
    out.sort_by(|a, b| b.0.height(t).cmp(&a.0.height(t)).then(a.0.cmp(&b.0)));
    Ok(out)
}

/// Per-coordinate coefficients of the root-coordinate height functional.
fn root_height_functional(t: &ReductiveType) -> Vec<Rat> {
    let mut out = Vec::with_capacity(t.semisimple_rank());
    for f in &t.factors {
        let fd = factor_data(*f);
        let n = f.rank;
        let cinv = crate::linalg::Mat::from_fn(n, n, |i, j| {
            <Rat as Scalar>::from_i64(fd.cartan[i][j])
        })
        .inverse()
        .expect("Cartan matrix invertible");
        for i in 0..n {
            let mut acc = Rat::zero();
            for j in 0..n {
                acc += cinv[(i, j)].clone();
            }
            out.push(acc);
        }
    }
    out
}

/// Characters of the symmetric powers `S^0, ..., S^kmax` via the Newton
/// recursion over Adams operations.
pub fn symmetric_powers(ch: &FormalCharacter, kmax: usize) -> Vec<FormalCharacter> {
    let mut sym: Vec<FormalCharacter> = Vec::with_capacity(kmax + 1);
    let mut trivial = FormalCharacter::zero(ch.coord_len);
    trivial.add_weight(vec![0; ch.coord_len], 1);
    sym.push(trivial);
    let adams: Vec<FormalCharacter> = (0..=kmax as i64).map(|k| ch.adams(k)).collect();
    for k in 1..=kmax {
        let mut acc = FormalCharacter::zero(ch.coord_len);
        for i in 1..=k {
            let term = adams[i].product(&sym[k - i]);
            for (w, m) in term.weights {
                acc.add_weight(w, m);
            }
        }
        let mut out = FormalCharacter::zero(ch.coord_len);
        for (w, m) in acc.weights {
            assert_eq!(m % k as i64, 0, "Newton recursion yields integral multiplicities");
            let q = m / k as i64;
            if q != 0 {
                out.add_weight(w, q);
            }
        }
        sym.push(out);
    }
    sym
}

/// A linear map from source weight coordinates to target weight
/// coordinates, acting on doubled coordinate vectors.
#[derive(Clone, Debug)]
pub struct CartanMap {
    pub src_len: usize,
    pub dst_len: usize,
    /// row i = image of the i-th source basis functional
    pub matrix: Vec<Vec<Rat>>,
}

impl CartanMap {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { <Rat as Scalar>::from_i64(1) } else { Rat::zero() })
                    .collect()
            })
            .collect();
        CartanMap { src_len: n, dst_len: n, matrix }
    }
    /// Apply to a doubled coordinate vector; the image must again have
    /// integral doubled coordinates.
    pub fn apply(&self, w: &[i64]) -> Vec<i64> {
        assert_eq!(w.len(), self.src_len);
        (0..self.dst_len)
            .map(|j| {
                let mut acc = Rat::zero();
                for (i, &wi) in w.iter().enumerate() {
                    if wi != 0 {
                        acc += <Rat as Scalar>::from_i64(wi) * self.matrix[i][j].clone();
                    }
                }
                crate::scalar::rat_to_i64(&acc)
                    .expect("restricted weight has half-integral coordinates")
            })
            .collect()
    }
    pub fn compose(&self, then: &CartanMap) -> CartanMap {
        assert_eq!(self.dst_len, then.src_len);
        let matrix = (0..self.src_len)
            .map(|i| {
                (0..then.dst_len)
                    .map(|j| {
                        let mut acc = Rat::zero();
                        for k in 0..self.dst_len {
                            acc += self.matrix[i][k].clone() * then.matrix[k][j].clone();
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        CartanMap { src_len: self.src_len, dst_len: then.dst_len, matrix }
    }
}

/// Pushforward of a weight multiset along a Cartan map; the total
/// multiplicity is preserved.
pub fn restrict_character(ch: &FormalCharacter, map: &CartanMap) -> FormalCharacter {
    assert_eq!(ch.coord_len, map.src_len);
    let mut out = FormalCharacter::zero(map.dst_len);
    for (w, m) in &ch.weights {
        out.add_weight(map.apply(w), *m);
    }
    debug_assert_eq!(out.total(), ch.total());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Series, SimpleFactor};

    fn simple(series: Series, rank: usize) -> ReductiveType {
        ReductiveType::simple(series, rank).unwrap()
    }

    #[test]
    fn character_total_and_trivial() {
        let g2 = simple(Series::G2, 2);
        let lam = Weight::from_plain(&[1, 0]);
        let ch = formal_character(&g2, &lam).unwrap();
        assert_eq!(ch.total(), 7);
        let dec = decompose(&g2, &ch).unwrap();
        assert_eq!(dec, vec![(lam, 1)]);
    }

    #[test]
    fn c2_tensor_square_of_standard() {
        // char(F^4) * char(F^4) = R(2pi_1) + R(pi_2) + R(0), dims 10+5+1
        let c2 = simple(Series::C, 2);
        let std = formal_character(&c2, &Weight::from_plain(&[1, 0])).unwrap();
        let sq = std.product(&std);
        let dec = decompose(&c2, &sq).unwrap();
        let expected = vec![
            (Weight::from_plain(&[2, 0]), 1),
            (Weight::from_plain(&[0, 1]), 1),
            (Weight::from_plain(&[0, 0]), 1),
        ];
        assert_eq!(dec, expected);
        assert_eq!(weyl_dim(&c2, &Weight::from_plain(&[2, 0])).unwrap(), 10);
        assert_eq!(weyl_dim(&c2, &Weight::from_plain(&[0, 1])).unwrap(), 5);
    }

    #[test]
    fn bn_square_of_vector_rep() {
        // char(F^7)^2 for B3 contains R(2pi_1), R(pi_2), R(0) once each
        let b3 = simple(Series::B, 3);
        let std = formal_character(&b3, &Weight::from_plain(&[1, 0, 0])).unwrap();
        let sq = std.product(&std);
        let dec = decompose(&b3, &sq).unwrap();
        assert_eq!(dec.len(), 3);
        assert!(dec.contains(&(Weight::from_plain(&[2, 0, 0]), 1)));
        assert!(dec.contains(&(Weight::from_plain(&[0, 1, 0]), 1)));
        assert!(dec.contains(&(Weight::from_plain(&[0, 0, 0]), 1)));
    }

    #[test]
    fn symmetric_powers_of_so_standard() {
        // S^2 F^n for SO_n decomposes as R(2pi_1) + R(0)
        let b3 = simple(Series::B, 3);
        let std = formal_character(&b3, &Weight::from_plain(&[1, 0, 0])).unwrap();
        let sym = symmetric_powers(&std, 2);
        assert_eq!(sym[1], std);
        assert_eq!(sym[2].total(), 7 * 8 / 2);
        let dec = decompose(&b3, &sym[2]).unwrap();
        assert_eq!(
            dec,
            vec![(Weight::from_plain(&[2, 0, 0]), 1), (Weight::from_plain(&[0, 0, 0]), 1)]
        );
    }

    #[test]
    fn symmetric_powers_of_sp_standard() {
        // S^k F^{2n} for Sp_2n is irreducible with highest weight k pi_1
        let c2 = simple(Series::C, 2);
        let std = formal_character(&c2, &Weight::from_plain(&[1, 0])).unwrap();
        for k in 2..=3usize {
            let sym = symmetric_powers(&std, k);
            let dec = decompose(&c2, &sym[k]).unwrap();
            assert_eq!(dec, vec![(Weight::from_plain(&[k as i64, 0]), 1)]);
        }
    }

    #[test]
    fn sym_dimension_formula() {
        let c2 = simple(Series::C, 2);
        let std = formal_character(&c2, &Weight::from_plain(&[1, 0])).unwrap();
        let sym = symmetric_powers(&std, 4);
        for (k, s) in sym.iter().enumerate() {
            // dim S^k(F^4) = C(4 + k - 1, k)
            let expect: i64 = match k {
                0 => 1,
                _ => {
                    let mut n = 1i64;
                    for i in 0..k as i64 {
                        n = n * (4 + i) / (i + 1);
                    }
                    n
                }
            };
            assert_eq!(s.total(), expect);
        }
    }

    #[test]
    fn torus_coordinates_flow_through() {
        let t = ReductiveType::new(vec![SimpleFactor::new(Series::A, 1).unwrap()], vec!["d".into()]);
        let mut lam = Weight::from_plain(&[1, 1]);
        lam.0[1] = 2; // pi_1 + delta
        let ch = formal_character(&t, &lam).unwrap();
        assert_eq!(ch.total(), 2);
        for w in ch.weights.keys() {
            assert_eq!(w[1], 2);
        }
        let sq = symmetric_powers(&ch, 2)[2].clone();
        for w in sq.weights.keys() {
            assert_eq!(w[1], 4);
        }
    }

    #[test]
    fn restriction_preserves_total() {
        let b3 = simple(Series::B, 3);
        let ch = formal_character(&b3, &Weight::from_plain(&[0, 0, 1])).unwrap();
        let id = CartanMap::identity(3);
        assert_eq!(restrict_character(&ch, &id), ch);
    }

    #[test]
    fn peeling_detects_non_characters() {
        let c2 = simple(Series::C, 2);
        let mut ch = FormalCharacter::zero(2);
        ch.add_weight(vec![2, 0], 1); // highest weight of F^4 alone
        assert!(decompose(&c2, &ch).is_err());
    }
}
