//! Root data for the simple series A, B, C, D and G2 in Bourbaki numbering:
//! Cartan matrices, positive roots, the invariant form on weight space,
//! Weyl dimension formula and Freudenthal weight multiplicities.
//!
//! Weights of a single factor are handled in fundamental-weight coordinates
//! (plain, not doubled); the doubled convention only appears at the level of
//! [`crate::chars`].

use crate::error::{Error, Result};
use crate::scalar::{rat_to_i64, Rat, Scalar};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    G2,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub series: Series,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A | Series::B | Series::C => rank >= 1,
            Series::D => rank >= 2,
            Series::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::invalid("factor", format!("{series:?} of rank {rank}")));
        }
        Ok(SimpleFactor { series, rank })
    }
    pub fn group_dim(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 2),
            Series::B => n * (2 * n + 1),
            Series::C => n * (2 * n + 1),
            Series::D => n * (2 * n - 1),
            Series::G2 => 14,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::A => write!(f, "A{}", self.rank),
            Series::B => write!(f, "B{}", self.rank),
            Series::C => write!(f, "C{}", self.rank),
            Series::D => write!(f, "D{}", self.rank),
            Series::G2 => write!(f, "G2"),
        }
    }
}

/// Cartan matrix with rows `c[i][j] = <alpha_i, alpha_j^vee>`; the i-th row
/// is the fundamental-coordinate vector of the i-th simple root.
fn cartan_matrix(factor: &SimpleFactor) -> Vec<Vec<i64>> {
    let n = factor.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
        if i + 1 < n {
            row[i + 1] = -1;
        }
        if i >= 1 {
            row[i - 1] = -1;
        }
    }
    match factor.series {
        Series::A => {}
        Series::B => {
            if n >= 2 {
                c[n - 2][n - 1] = -2;
            }
        }
        Series::C => {
            if n >= 2 {
                c[n - 1][n - 2] = -2;
            }
        }
        Series::D => {
            assert!(n >= 2);
            if n == 2 {
                c[0][1] = 0;
                c[1][0] = 0;
            } else {
                c[n - 1][n - 2] = 0;
                c[n - 2][n - 1] = 0;
                c[n - 1][n - 3] = -1;
                c[n - 3][n - 1] = -1;
            }
        }
        Series::G2 => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Half squared lengths of the simple roots (long roots normalized to 2).
fn symmetrizers(factor: &SimpleFactor) -> Vec<Rat> {
    let n = factor.rank;
    let one = Rat::one;
    match factor.series {
        Series::A | Series::D => vec![one(); n],
        Series::B => {
            let mut d = vec![one(); n];
            d[n - 1] = <Rat as Scalar>::from_ratio(1, 2);
            d
        }
        Series::C => {
            let mut d = vec![one(); n];
            d[n - 1] = <Rat as Scalar>::from_i64(2);
            d
        }
        Series::G2 => vec![one(), <Rat as Scalar>::from_i64(3)],
    }
}

/// Precomputed root data for one simple factor.
#[derive(Clone, Debug)]
pub struct FactorData {
    pub factor: SimpleFactor,
    pub cartan: Vec<Vec<i64>>,
    /// positive roots in fundamental coordinates, by increasing height
    pub pos_roots: Vec<Vec<i64>>,
    /// positive roots in simple-root coordinates (same order)
    pub pos_roots_simple: Vec<Vec<i64>>,
    /// invariant form on fundamental coordinates
    pub gram: Vec<Vec<Rat>>,
    cartan_inv: Vec<Vec<Rat>>,
}

fn mat_inverse_rat(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let a = crate::linalg::Mat::from_fn(n, n, |i, j| <Rat as Scalar>::from_i64(m[i][j]));
    let inv = a.inverse().expect("Cartan matrix invertible");
    (0..n).map(|i| (0..n).map(|j| inv[(i, j)].clone()).collect()).collect()
}

impl FactorData {
    pub fn new(factor: SimpleFactor) -> Self {
        let n = factor.rank;
        let cartan = cartan_matrix(&factor);
        let d = symmetrizers(&factor);
        // generate the root system by reflection closure of the simple roots
        let mut roots: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = cartan.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            if !roots.insert(b.clone()) {
                continue;
            }
            for i in 0..n {
                let mut r = b.clone();
                let c = r[i];
                if c != 0 {
                    for (j, x) in r.iter_mut().enumerate() {
                        *x -= c * cartan[i][j];
                    }
                }
                queue.push_back(r);
            }
        }
        let cinv = mat_inverse_rat(&cartan);
        let simple_coords = |b: &[i64]| -> Vec<i64> {
            // x with x . C = b  =>  x = b . C^{-1}
            (0..n)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for (i, &bi) in b.iter().enumerate() {
                        if bi != 0 {
                            acc += <Rat as Scalar>::from_i64(bi) * cinv[i][j].clone();
                        }
                    }
                    rat_to_i64(&acc).expect("root has integral simple coordinates")
                })
                .collect()
        };
        let mut pos: Vec<(Vec<i64>, Vec<i64>)> = roots
            .into_iter()
            .filter_map(|b| {
                let sc = simple_coords(&b);
                if sc.iter().all(|&x| x >= 0) && sc.iter().any(|&x| x > 0) {
                    Some((b, sc))
                } else {
                    None
                }
            })
            .collect();
        pos.sort_by_key(|(_, sc)| (sc.iter().sum::<i64>(), sc.clone()));
        let (pos_roots, pos_roots_simple): (Vec<_>, Vec<_>) = pos.into_iter().unzip();
        // gram[a][k] = (pi_a, pi_k) = (C^{-1})_{ka} d_a
        let gram: Vec<Vec<Rat>> = (0..n)
            .map(|a| (0..n).map(|k| cinv[k][a].clone() * d[a].clone()).collect())
            .collect();
        for a in 0..n {
            for k in 0..n {
                debug_assert_eq!(gram[a][k], gram[k][a], "invariant form must be symmetric");
            }
        }
        FactorData { factor, cartan, pos_roots, pos_roots_simple, gram, cartan_inv: cinv }
    }

    pub fn rank(&self) -> usize {
        self.factor.rank
    }

    pub fn form(&self, x: &[i64], y: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (k, &yk) in y.iter().enumerate() {
                if yk != 0 {
                    acc += <Rat as Scalar>::from_i64(xa * yk) * self.gram[a][k].clone();
                }
            }
        }
        acc
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.iter().all(|&x| x >= 0)
    }

    /// Apply the i-th simple reflection in fundamental coordinates.
    pub fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for (j, x) in w.iter_mut().enumerate() {
                *x -= c * self.cartan[i][j];
            }
        }
    }

    /// The dominant Weyl conjugate.
    pub fn dominant_conjugate(&self, w: &[i64]) -> Vec<i64> {
        let mut w = w.to_vec();
        loop {
            match w.iter().position(|&x| x < 0) {
                None => return w,
                Some(i) => self.reflect(&mut w, i),
            }
        }
    }

    /// Simple-root coordinates of a weight-lattice vector if they are
    /// nonnegative integers.
    fn root_coords_nonneg(&self, diff: &[i64]) -> bool {
        let n = self.rank();
        (0..n).all(|j| {
            let mut acc = Rat::zero();
            for (i, &xi) in diff.iter().enumerate() {
                if xi != 0 {
                    acc += <Rat as Scalar>::from_i64(xi) * self.cartan_inv[i][j].clone();
                }
            }
            matches!(rat_to_i64(&acc), Some(v) if v >= 0)
        })
    }

    /// Weyl dimension of the irreducible with highest weight `lam` (dominant).
    pub fn weyl_dim(&self, lam: &[i64]) -> Result<u64> {
        if !self.is_dominant(lam) {
            return Err(Error::invalid("weight", format!("{lam:?} is not dominant")));
        }
        let rho = vec![1i64; self.rank()];
        let mut num = BigRational::one();
        let lr: Vec<i64> = lam.iter().zip(&rho).map(|(&x, &r)| x + r).collect();
        for a in &self.pos_roots {
            num *= self.form(&lr, a) / self.form(&rho, a);
        }
        assert!(num.denom().is_one(), "Weyl dimension must be an integer");
        num.numer().to_u64().ok_or_else(|| Error::invalid("weight", "dimension overflow"))
    }

    /// All weights of the irreducible with highest weight `lam`, with
    /// multiplicities, by the Freudenthal recursion.
    pub fn weights_of_irrep(&self, lam: &[i64]) -> Result<Vec<(Vec<i64>, i64)>> {
        if !self.is_dominant(lam) {
            return Err(Error::invalid("weight", format!("{lam:?} is not dominant")));
        }
        let n = self.rank();
        let inside = |w: &[i64]| -> bool {
            let dom = self.dominant_conjugate(w);
            let diff: Vec<i64> = lam.iter().zip(&dom).map(|(&a, &b)| a - b).collect();
            self.root_coords_nonneg(&diff)
        };
        // breadth-first sweep of the full weight set via simple-root steps
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        seen.insert(lam.to_vec());
        queue.push_back(lam.to_vec());
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                let mut w2 = w.clone();
                for (j, x) in w2.iter_mut().enumerate() {
                    *x -= self.cartan[i][j];
                }
                if !seen.contains(&w2) && inside(&w2) {
                    seen.insert(w2.clone());
                    queue.push_back(w2);
                }
            }
        }
        // dominant representatives sorted by height gap from lam
        let rho = vec![1i64; n];
        let lam_rho: Vec<i64> = lam.iter().zip(&rho).map(|(&a, &b)| a + b).collect();
        let norm_lam = self.form(&lam_rho, &lam_rho);
        let mut dominants: Vec<Vec<i64>> =
            seen.iter().filter(|w| self.is_dominant(w)).cloned().collect();
        let height_gap = |w: &[i64]| -> (i64, Vec<i64>) {
            let diff: Vec<i64> = lam.iter().zip(w).map(|(&a, &b)| a - b).collect();
            let mut acc = Rat::zero();
            for (i, &xi) in diff.iter().enumerate() {
                if xi != 0 {
                    for c in self.cartan_inv[i].iter() {
                        acc += <Rat as Scalar>::from_i64(xi) * c.clone();
                    }
                }
            }
            // scale away denominators; any fixed positive multiple works
            let scaled = acc * <Rat as Scalar>::from_i64(2520);
            (scaled.to_integer().to_i64().expect("height fits"), w.to_vec())
        };
        dominants.sort_by_key(|w| height_gap(w));
        let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
        for mu in &dominants {
            if mu == lam {
                mult.insert(mu.clone(), 1);
                continue;
            }
            let mut rhs = Rat::zero();
            for alpha in &self.pos_roots {
                let mut k = 1i64;
                loop {
                    let wk: Vec<i64> = mu.iter().zip(alpha).map(|(&m, &a)| m + k * a).collect();
                    if !seen.contains(&wk) {
                        break;
                    }
                    let m_up = mult
                        .get(&self.dominant_conjugate(&wk))
                        .copied()
                        .expect("higher multiplicity already computed");
                    rhs += self.form(&wk, alpha) * <Rat as Scalar>::from_i64(m_up);
                    k += 1;
                }
            }
            let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(&a, &b)| a + b).collect();
            let denom = norm_lam.clone() - self.form(&mu_rho, &mu_rho);
            assert!(!denom.is_zero(), "Freudenthal denominator vanished");
            let m = rhs * <Rat as Scalar>::from_i64(2) / denom;
            let m = rat_to_i64(&m).expect("multiplicity is an integer");
            assert!(m > 0, "dominant weight inside the hull has positive multiplicity");
            mult.insert(mu.clone(), m);
        }
        let mut out: Vec<(Vec<i64>, i64)> = Vec::with_capacity(seen.len());
        for w in seen {
            let m = mult[&self.dominant_conjugate(&w)];
            out.push((w, m));
        }
        out.sort();
        Ok(out)
    }
}

thread_local! {
    static FACTOR_CACHE: std::cell::RefCell<HashMap<SimpleFactor, std::rc::Rc<FactorData>>> =
        std::cell::RefCell::new(HashMap::new());
}

/// Cached root data for a factor.
pub fn factor_data(factor: SimpleFactor) -> std::rc::Rc<FactorData> {
    FACTOR_CACHE.with(|c| {
        c.borrow_mut()
            .entry(factor)
            .or_insert_with(|| std::rc::Rc::new(FactorData::new(factor)))
            .clone()
    })
}

/// A connected reductive group shape: simple factors plus a central torus
/// with named basis characters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReductiveType {
    pub factors: Vec<SimpleFactor>,
    pub torus_names: Vec<String>,
}

impl ReductiveType {
    pub fn new(factors: Vec<SimpleFactor>, torus_names: Vec<String>) -> Self {
        ReductiveType { factors, torus_names }
    }
    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        Ok(ReductiveType::new(vec![SimpleFactor::new(series, rank)?], vec![]))
    }
    pub fn torus_rank(&self) -> usize {
        self.torus_names.len()
    }
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }
    pub fn coord_len(&self) -> usize {
        self.semisimple_rank() + self.torus_rank()
    }
    /// (offset, rank) of each factor's block in the coordinate vector.
    pub fn factor_spans(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for f in &self.factors {
            out.push((off, f.rank));
            off += f.rank;
        }
        out
    }
    pub fn torus_offset(&self) -> usize {
        self.semisimple_rank()
    }
    /// Append a torus coordinate, used for auxiliary grading characters.
    pub fn with_extra_torus(&self, name: &str) -> ReductiveType {
        let mut t = self.clone();
        t.torus_names.push(name.to_string());
        t
    }
}

impl fmt::Display for ReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for fac in &self.factors {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "{fac}")?;
            first = false;
        }
        for _ in 0..self.torus_rank() {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "F*")?;
            first = false;
        }
        Ok(())
    }
}

/// A weight of a [`ReductiveType`]; all coordinates are stored doubled so
/// that half-integral characters of covers stay integral.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(t: &ReductiveType) -> Self {
        Weight(vec![0; t.coord_len()])
    }
    /// From plain (undoubled) coordinates.
    pub fn from_plain(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| 2 * c).collect())
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(&a, &b)| a + b).collect())
    }
    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(&a, &b)| a - b).collect())
    }
    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&a| -a).collect())
    }
    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&a| k * a).collect())
    }
    pub fn is_dominant(&self, t: &ReductiveType) -> bool {
        self.0[..t.semisimple_rank()].iter().all(|&x| x >= 0)
    }
    /// Sum of semisimple fundamental coordinates (doubled): the peeling key.
    pub fn height(&self, t: &ReductiveType) -> i64 {
        self.0[..t.semisimple_rank()].iter().sum()
    }
    /// Fundamental-weight basis vector of factor `fi` (0-based), index `i`
    /// (1-based; index 0 gives the zero weight, matching the pi_0 = 0
    /// convention of the tables).
    pub fn fundamental(t: &ReductiveType, fi: usize, i: usize) -> Result<Weight> {
        let spans = t.factor_spans();
        let (off, rank) =
            spans.get(fi).copied().ok_or_else(|| Error::invalid("weight", format!("no factor {fi}")))?;
        let mut w = Weight::zero(t);
        if i == 0 {
            return Ok(w);
        }
        if i > rank {
            return Err(Error::invalid(
                "weight",
                format!("pi_{i} out of range for factor {fi} of rank {rank}"),
            ));
        }
        w.0[off + i - 1] = 2;
        Ok(w)
    }
    /// Torus character basis vector (doubled).
    pub fn torus_char(t: &ReductiveType, j: usize) -> Result<Weight> {
        if j >= t.torus_rank() {
            return Err(Error::invalid("weight", format!("no torus character {j}")));
        }
        let mut w = Weight::zero(t);
        w.0[t.torus_offset() + j] = 2;
        Ok(w)
    }

    /// Render using the table conventions: unprimed/primed/double-primed
    /// fundamental weights per factor, named torus characters, halves as /2.
    pub fn display(&self, t: &ReductiveType) -> String {
        let primes = ["", "'", "''", "'''"];
        let mut terms: Vec<String> = Vec::new();
        for (fi, (off, rank)) in t.factor_spans().into_iter().enumerate() {
            for i in 0..rank {
                let c = self.0[off + i];
                if c == 0 {
                    continue;
                }
                let base = format!("pi{}_{}", primes.get(fi).copied().unwrap_or("^"), i + 1);
                terms.push(coeff_term(c, &base));
            }
        }
        for (j, name) in t.torus_names.iter().enumerate() {
            let c = self.0[t.torus_offset() + j];
            if c != 0 {
                terms.push(coeff_term(c, name));
            }
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, term) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        out
    }
}

fn coeff_term(doubled: i64, base: &str) -> String {
    match doubled {
        2 => base.to_string(),
        -2 => format!("-{base}"),
        1 => format!("{base}/2"),
        -1 => format!("-{base}/2"),
        c if c % 2 == 0 => format!("{}*{base}", c / 2),
        c => format!("{c}/2*{base}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(series: Series, rank: usize) -> std::rc::Rc<FactorData> {
        factor_data(SimpleFactor::new(series, rank).unwrap())
    }

    #[test]
    fn cartan_matrices() {
        let c2 = fd(Series::C, 2);
        assert_eq!(c2.cartan, vec![vec![2, -1], vec![-2, 2]]);
        let g2 = fd(Series::G2, 2);
        assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
        let a1 = fd(Series::A, 1);
        assert_eq!(a1.cartan, vec![vec![2]]);
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(fd(Series::A, 3).pos_roots.len(), 6);
        assert_eq!(fd(Series::B, 3).pos_roots.len(), 9);
        assert_eq!(fd(Series::C, 3).pos_roots.len(), 9);
        assert_eq!(fd(Series::D, 4).pos_roots.len(), 12);
        assert_eq!(fd(Series::D, 2).pos_roots.len(), 2);
        assert_eq!(fd(Series::G2, 2).pos_roots.len(), 6);
    }

    #[test]
    fn g2_first_root_is_short() {
        let g2 = fd(Series::G2, 2);
        let a1 = g2.cartan[0].clone();
        let a2 = g2.cartan[1].clone();
        assert!(g2.form(&a1, &a1) < g2.form(&a2, &a2), "alpha_1 short, alpha_2 long");
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(fd(Series::G2, 2).weyl_dim(&[1, 0]).unwrap(), 7);
        assert_eq!(fd(Series::G2, 2).weyl_dim(&[0, 1]).unwrap(), 14);
        assert_eq!(fd(Series::B, 3).weyl_dim(&[0, 0, 1]).unwrap(), 8);
        assert_eq!(fd(Series::B, 3).weyl_dim(&[0, 1, 0]).unwrap(), 21);
        assert_eq!(fd(Series::B, 3).weyl_dim(&[1, 0, 0]).unwrap(), 7);
        assert_eq!(fd(Series::C, 2).weyl_dim(&[0, 0]).unwrap(), 1);
        assert_eq!(fd(Series::C, 2).weyl_dim(&[1, 0]).unwrap(), 4);
        assert_eq!(fd(Series::C, 3).weyl_dim(&[0, 0, 1]).unwrap(), 14);
        assert_eq!(fd(Series::A, 2).weyl_dim(&[1, 1]).unwrap(), 8);
        assert_eq!(fd(Series::D, 4).weyl_dim(&[0, 0, 0, 1]).unwrap(), 8);
        assert_eq!(fd(Series::D, 2).weyl_dim(&[1, 1]).unwrap(), 4);
        assert_eq!(fd(Series::B, 1).weyl_dim(&[2]).unwrap(), 3);
    }

    #[test]
    fn freudenthal_totals_match_weyl_dim() {
        for (series, rank, lam) in [
            (Series::G2, 2, vec![1, 0]),
            (Series::G2, 2, vec![0, 1]),
            (Series::G2, 2, vec![1, 1]),
            (Series::B, 3, vec![0, 1, 0]),
            (Series::B, 3, vec![0, 0, 2]),
            (Series::C, 3, vec![0, 0, 1]),
            (Series::A, 2, vec![2, 1]),
            (Series::D, 4, vec![0, 1, 0, 0]),
        ] {
            let f = fd(series, rank);
            let ws = f.weights_of_irrep(&lam).unwrap();
            let total: i64 = ws.iter().map(|(_, m)| m).sum();
            assert_eq!(total as u64, f.weyl_dim(&lam).unwrap(), "{series:?}{rank} {lam:?}");
        }
    }

    #[test]
    fn g2_seven_rep_weights() {
        let f = fd(Series::G2, 2);
        let ws = f.weights_of_irrep(&[1, 0]).unwrap();
        assert_eq!(ws.len(), 7);
        let zero_mult = ws.iter().find(|(w, _)| w.iter().all(|&x| x == 0)).unwrap().1;
        assert_eq!(zero_mult, 1);
        assert!(ws.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn reflection_invariance_of_characters() {
        let f = fd(Series::B, 3);
        let ws = f.weights_of_irrep(&[1, 0, 1]).unwrap();
        let set: HashMap<Vec<i64>, i64> = ws.iter().cloned().collect();
        for i in 0..3 {
            for (w, m) in &ws {
                let mut r = w.clone();
                f.reflect(&mut r, i);
                assert_eq!(set.get(&r), Some(m));
            }
        }
    }

    #[test]
    fn weight_display() {
        let t = ReductiveType::new(
            vec![
                SimpleFactor::new(Series::B, 3).unwrap(),
                SimpleFactor::new(Series::A, 1).unwrap(),
            ],
            vec!["chi".into()],
        );
        let w = Weight(vec![2, 0, 4, 2, 1]);
        assert_eq!(w.display(&t), "pi_1 + 2*pi_3 + pi'_1 + chi/2");
        assert_eq!(Weight::zero(&t).display(&t), "0");
    }
}
