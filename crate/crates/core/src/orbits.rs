//! Nilpotent-orbit labels for the symplectic and orthogonal groups, the
//! closure order, the flag-variety-to-Richardson-orbit map, nil-equivalence
//! and the induced poset with its minimal elements.

use crate::error::{Error, Result};
use crate::partitions::{
    collapse, dominates, dual, enumerate_partitions, enumerate_symmetric_compositions,
    in_parity_class, is_symmetric, is_very_even, Composition, ParityClass, Partition, ENUM_BOUND,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Symplectic,
    Orthogonal,
}

/// Ambient group: `Sp_d` (even `d >= 2`) or `SO_d` (`d >= 3`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupKind {
    pub kind: Kind,
    pub dim: u32,
}

impl GroupKind {
    pub fn new(kind: Kind, dim: u32) -> Result<Self> {
        match kind {
            Kind::Symplectic if dim < 2 || dim % 2 != 0 => {
                Err(Error::invalid("group", format!("Sp_{dim} needs even dim >= 2")))
            }
            Kind::Orthogonal if dim < 3 => {
                Err(Error::invalid("group", format!("SO_{dim} needs dim >= 3")))
            }
            _ => Ok(GroupKind { kind, dim }),
        }
    }
    pub fn sp(dim: u32) -> Result<Self> {
        GroupKind::new(Kind::Symplectic, dim)
    }
    pub fn so(dim: u32) -> Result<Self> {
        GroupKind::new(Kind::Orthogonal, dim)
    }
    pub fn epsilon(&self) -> ParityClass {
        match self.kind {
            Kind::Symplectic => ParityClass::Minus,
            Kind::Orthogonal => ParityClass::Plus,
        }
    }
    /// Rank of the simple-root index set.
    pub fn rank(&self) -> usize {
        (self.dim / 2) as usize
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Symplectic => write!(f, "Sp_{}", self.dim),
            Kind::Orthogonal => write!(f, "SO_{}", self.dim),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlusMinus {
    Plus,
    Minus,
}

impl fmt::Display for PlusMinus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlusMinus::Plus => write!(f, "+"),
            PlusMinus::Minus => write!(f, "-"),
        }
    }
}

/// Sign datum on an orbit label. Very even orthogonal partitions label two
/// orbits; a Richardson orbit of a very even partition is one of them but
/// the construction does not say which, hence `Unresolved`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitSign {
    None,
    Signed(PlusMinus),
    Unresolved,
}

impl fmt::Display for OrbitSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSign::None => Ok(()),
            OrbitSign::Signed(s) => write!(f, "{s}"),
            OrbitSign::Unresolved => write!(f, "?"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub partition: Partition,
    pub sign: OrbitSign,
}

impl OrbitLabel {
    pub fn validate(&self, g: &GroupKind) -> Result<()> {
        if !in_parity_class(&self.partition, g.epsilon()) {
            return Err(Error::invalid(
                "orbit label",
                format!("{} is not in the parity class of {g}", self.partition),
            ));
        }
        if self.partition.total() != g.dim {
            return Err(Error::invalid("orbit label", "partition total differs from dim"));
        }
        let very_even = g.kind == Kind::Orthogonal && is_very_even(&self.partition);
        match (&self.sign, very_even) {
            (OrbitSign::None, false) => Ok(()),
            (OrbitSign::Signed(_) | OrbitSign::Unresolved, true) => Ok(()),
            _ => Err(Error::invalid("orbit label", "sign present iff partition is very even")),
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.partition, self.sign)
    }
}

/// A flag variety of `G`, named by a symmetric composition and, for the even
/// orthogonal group with an even number of parts and middle part at least 2,
/// one of two signs.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FlagDescriptor {
    pub group: GroupKind,
    pub composition: Composition,
    pub sign: Option<PlusMinus>,
}

impl FlagDescriptor {
    pub fn new(group: GroupKind, composition: Composition, sign: Option<PlusMinus>) -> Result<Self> {
        let f = FlagDescriptor { group, composition, sign };
        f.validate()?;
        Ok(f)
    }
    pub fn validate(&self) -> Result<()> {
        if !is_symmetric(&self.composition) {
            return Err(Error::invalid("flag", "composition must be symmetric"));
        }
        if self.composition.total() != self.group.dim {
            return Err(Error::invalid("flag", "composition total differs from dim"));
        }
        if self.needs_sign() != self.sign.is_some() {
            return Err(Error::invalid(
                "flag",
                format!(
                    "sign must be {} for {} on {}",
                    if self.needs_sign() { "present" } else { "absent" },
                    self.composition,
                    self.group
                ),
            ));
        }
        Ok(())
    }
    /// Signs distinguish the two orbits exactly for the even orthogonal
    /// group with evenly many parts and middle part at least 2.
    pub fn needs_sign(&self) -> bool {
        let p = self.composition.len();
        self.group.kind == Kind::Orthogonal
            && self.group.dim % 2 == 0
            && p % 2 == 0
            && self.composition.parts()[p / 2 - 1] >= 2
    }
    pub fn is_trivial(&self) -> bool {
        self.composition.is_trivial()
    }
}

impl fmt::Display for FlagDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.group.kind {
            Kind::Symplectic => "SpFl",
            Kind::Orthogonal => "SOFl",
        };
        write!(f, "{name}")?;
        if let Some(s) = self.sign {
            write!(f, "{s}")?;
        }
        write!(f, "_{}", self.composition)
    }
}

/// All orbit labels for `g`, very even partitions split into the two signs.
pub fn orbit_labels(g: &GroupKind) -> Result<Vec<OrbitLabel>> {
    let parts = enumerate_partitions(g.dim, Some(g.epsilon()), ENUM_BOUND)?;
    let mut out = Vec::new();
    for p in parts {
        if g.kind == Kind::Orthogonal && is_very_even(&p) {
            out.push(OrbitLabel { partition: p.clone(), sign: OrbitSign::Signed(PlusMinus::Plus) });
            out.push(OrbitLabel { partition: p, sign: OrbitSign::Signed(PlusMinus::Minus) });
        } else {
            out.push(OrbitLabel { partition: p, sign: OrbitSign::None });
        }
    }
    Ok(out)
}

/// Closure order on orbit labels: an orbit lies in the closure of another
/// exactly when the labels coincide or the partitions strictly dominate.
/// Two orbits sharing a very even partition with different signs are
/// incomparable.
pub fn closure_leq(g: &GroupKind, o1: &OrbitLabel, o2: &OrbitLabel) -> Result<bool> {
    o1.validate(g)?;
    o2.validate(g)?;
    if o1.partition == o2.partition {
        return Ok(o1.sign == o2.sign);
    }
    dominates(&o1.partition, &o2.partition)
}

/// The Richardson orbit of a flag variety: the parity collapse of the dual
/// of the composition. For a very even result the sign is left unresolved.
pub fn richardson(f: &FlagDescriptor) -> Result<OrbitLabel> {
    f.validate()?;
    let eps = f.group.epsilon();
    let partition = collapse(&dual(&f.composition), eps);
    let sign = if f.group.kind == Kind::Orthogonal && is_very_even(&partition) {
        assert!(
            f.needs_sign(),
            "very even Richardson partition from an unsigned flag: {f}"
        );
        OrbitSign::Unresolved
    } else {
        OrbitSign::None
    };
    Ok(OrbitLabel { partition, sign })
}

/// Key identifying a nil-equivalence class: the Richardson partition plus,
/// when that partition is very even, the sign of the defining flag.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassKey {
    pub partition: Partition,
    pub sign: Option<PlusMinus>,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(s) = self.sign {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn class_key(f: &FlagDescriptor) -> Result<ClassKey> {
    let orbit = richardson(f)?;
    let sign = match orbit.sign {
        OrbitSign::Unresolved => f.sign,
        OrbitSign::Signed(s) => Some(s),
        OrbitSign::None => None,
    };
    Ok(ClassKey { partition: orbit.partition, sign })
}

/// Two flags are nil-equivalent when their Richardson orbits coincide.
pub fn nil_equivalent(f1: &FlagDescriptor, f2: &FlagDescriptor) -> Result<bool> {
    if f1.group != f2.group {
        return Err(Error::GroupMismatch(format!("{} vs {}", f1.group, f2.group)));
    }
    Ok(class_key(f1)? == class_key(f2)?)
}

/// All nontrivial flag descriptors for `g`.
pub fn enumerate_flags(g: &GroupKind) -> Result<Vec<FlagDescriptor>> {
    let comps = enumerate_symmetric_compositions(g.dim, ENUM_BOUND)?;
    let mut out = Vec::new();
    for c in comps {
        if c.is_trivial() {
            continue;
        }
        let probe = FlagDescriptor { group: *g, composition: c.clone(), sign: None };
        if probe.needs_sign() {
            for s in [PlusMinus::Plus, PlusMinus::Minus] {
                out.push(FlagDescriptor { group: *g, composition: c.clone(), sign: Some(s) });
            }
        } else {
            out.push(probe);
        }
    }
    Ok(out)
}

/// The simple-root index set `I` with `X_I` isomorphic to the named flag
/// variety, following the case analysis for each group type.
pub fn flag_to_index_set(f: &FlagDescriptor) -> Result<Vec<usize>> {
    f.validate()?;
    if f.is_trivial() {
        return Err(Error::TrivialFlag);
    }
    let a = f.composition.parts();
    let p = a.len();
    let n = f.group.rank();
    let prefix = |k: usize| -> usize { a[..k].iter().map(|&x| x as usize).sum() };
    let half = p / 2;
    let mut idx: Vec<usize> = Vec::new();
    match f.group.kind {
        Kind::Symplectic => {
            for k in 1..=half {
                idx.push(prefix(k));
            }
        }
        Kind::Orthogonal if f.group.dim % 2 == 1 => {
            for k in 1..=half {
                idx.push(prefix(k));
            }
        }
        Kind::Orthogonal => {
            if p % 2 == 1 {
                let mid = a[half];
                assert!(mid % 2 == 0, "middle part of a symmetric composition of an even total");
                if mid >= 4 {
                    for k in 1..=half {
                        idx.push(prefix(k));
                    }
                } else {
                    for k in 1..half {
                        idx.push(prefix(k));
                    }
                    idx.push(n - 1);
                    idx.push(n);
                }
            } else {
                let q = half;
                if a[q - 1] == 1 {
                    for k in 1..q {
                        idx.push(prefix(k));
                    }
                    idx.push(n - 1);
                    idx.push(n);
                } else {
                    for k in 1..q {
                        idx.push(prefix(k));
                    }
                    match f.sign.expect("validated signed flag") {
                        PlusMinus::Plus => idx.push(n),
                        PlusMinus::Minus => idx.push(n - 1),
                    }
                }
            }
        }
    }
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}

#[derive(Clone, Debug, Serialize)]
pub struct NilClass {
    pub key: ClassKey,
    pub members: Vec<FlagDescriptor>,
}

/// The poset of nil-equivalence classes, ordered by strict dominance of the
/// Richardson partitions (same-partition different-sign classes are
/// incomparable).
#[derive(Clone, Debug, Serialize)]
pub struct FlagPoset {
    pub group: GroupKind,
    pub classes: Vec<NilClass>,
    /// `leq[i][j]` iff class i is below or equal to class j.
    pub leq: Vec<Vec<bool>>,
}

impl FlagPoset {
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.classes.len();
        let lt = |i: usize, j: usize| i != j && self.leq[i][j];
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
    pub fn minimal(&self) -> Vec<usize> {
        let n = self.classes.len();
        (0..n).filter(|&j| !(0..n).any(|i| i != j && self.leq[i][j])).collect()
    }
    /// Graphviz rendering with covering relations as edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph flag_poset {\n  rankdir=BT;\n");
        for (i, c) in self.classes.iter().enumerate() {
            let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
            s.push_str(&format!(
                "  n{} [label=\"{}\\n{}\"];\n",
                i,
                c.key,
                members.join("\\n")
            ));
        }
        for (i, j) in self.covers() {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn flag_poset(g: &GroupKind) -> Result<FlagPoset> {
    let flags = enumerate_flags(g)?;
    let mut by_key: BTreeMap<ClassKey, Vec<FlagDescriptor>> = BTreeMap::new();
    for f in flags {
        by_key.entry(class_key(&f)?).or_default().push(f);
    }
    let classes: Vec<NilClass> =
        by_key.into_iter().map(|(key, members)| NilClass { key, members }).collect();
    let n = classes.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (ki, kj) = (&classes[i].key, &classes[j].key);
            leq[i][j] = if ki.partition == kj.partition {
                ki.sign == kj.sign
            } else {
                dominates(&ki.partition, &kj.partition)?
            };
        }
    }
    Ok(FlagPoset { group: *g, classes, leq })
}

/// The minimal nil-equivalence classes of the poset.
pub fn minimal_classes(g: &GroupKind) -> Result<Vec<NilClass>> {
    let poset = flag_poset(g)?;
    let idx = poset.minimal();
    Ok(idx.into_iter().map(|i| poset.classes[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }
    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn flag(g: GroupKind, parts: &[u32], sign: Option<PlusMinus>) -> FlagDescriptor {
        FlagDescriptor::new(g, c(parts), sign).unwrap()
    }

    #[test]
    fn orbit_label_enumeration() {
        let sp4 = GroupKind::sp(4).unwrap();
        let labels = orbit_labels(&sp4).unwrap();
        let parts: Vec<_> = labels.iter().map(|l| l.partition.clone()).collect();
        assert_eq!(parts, vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);

        let so8 = GroupKind::so(8).unwrap();
        let labels = orbit_labels(&so8).unwrap();
        let very_even: Vec<_> =
            labels.iter().filter(|l| l.partition == p(&[2, 2, 2, 2])).collect();
        assert_eq!(very_even.len(), 2);
        assert!(very_even.iter().all(|l| matches!(l.sign, OrbitSign::Signed(_))));

        let so7 = GroupKind::so(7).unwrap();
        let labels = orbit_labels(&so7).unwrap();
        assert!(labels.iter().all(|l| l.sign == OrbitSign::None));
    }

    #[test]
    fn closure_order() {
        let sp6 = GroupKind::sp(6).unwrap();
        let o1 = OrbitLabel { partition: p(&[2, 2, 1, 1]), sign: OrbitSign::None };
        let o2 = OrbitLabel { partition: p(&[3, 3]), sign: OrbitSign::None };
        assert!(closure_leq(&sp6, &o1, &o2).unwrap());
        assert!(closure_leq(&sp6, &o1, &o1).unwrap());

        let so8 = GroupKind::so(8).unwrap();
        let plus = OrbitLabel {
            partition: p(&[2, 2, 2, 2]),
            sign: OrbitSign::Signed(PlusMinus::Plus),
        };
        let minus = OrbitLabel {
            partition: p(&[2, 2, 2, 2]),
            sign: OrbitSign::Signed(PlusMinus::Minus),
        };
        assert!(!closure_leq(&so8, &plus, &minus).unwrap());
        assert!(!closure_leq(&so8, &minus, &plus).unwrap());
        assert!(closure_leq(&so8, &plus, &plus).unwrap());
    }

    #[test]
    fn richardson_examples() {
        let sp6 = GroupKind::sp(6).unwrap();
        let f = flag(sp6, &[1, 4, 1], None);
        assert_eq!(richardson(&f).unwrap().partition, p(&[2, 2, 1, 1]));

        let so7 = GroupKind::so(7).unwrap();
        let f = flag(so7, &[1, 5, 1], None);
        let o = richardson(&f).unwrap();
        assert_eq!(o.partition, p(&[3, 1, 1, 1, 1]));
        assert_eq!(o.sign, OrbitSign::None);

        let so8 = GroupKind::so(8).unwrap();
        let f = flag(so8, &[4, 4], Some(PlusMinus::Plus));
        let o = richardson(&f).unwrap();
        assert_eq!(o.partition, p(&[2, 2, 2, 2]));
        assert_eq!(o.sign, OrbitSign::Unresolved);
    }

    #[test]
    fn unsigned_flags_never_hit_very_even() {
        // richardson() asserts this; exercise it across small even dims
        for d in [4u32, 8, 12, 16] {
            let g = GroupKind::so(d).unwrap();
            for f in enumerate_flags(&g).unwrap() {
                let _ = richardson(&f).unwrap();
            }
        }
    }

    #[test]
    fn nil_equivalence_examples() {
        let sp4 = GroupKind::sp(4).unwrap();
        assert!(nil_equivalent(&flag(sp4, &[1, 2, 1], None), &flag(sp4, &[2, 2], None)).unwrap());

        let so8 = GroupKind::so(8).unwrap();
        assert!(nil_equivalent(
            &flag(so8, &[2, 4, 2], None),
            &flag(so8, &[3, 2, 3], None)
        )
        .unwrap());

        let sp6 = GroupKind::sp(6).unwrap();
        assert!(!nil_equivalent(&flag(sp6, &[1, 4, 1], None), &flag(sp6, &[3, 3], None)).unwrap());
    }

    #[test]
    fn flag_enumeration() {
        let sp4 = GroupKind::sp(4).unwrap();
        let flags = enumerate_flags(&sp4).unwrap();
        assert_eq!(flags.len(), 3);
        for want in [c(&[1, 2, 1]), c(&[2, 2]), c(&[1, 1, 1, 1])] {
            assert!(flags.iter().any(|f| f.composition == want));
        }

        let so7 = GroupKind::so(7).unwrap();
        assert_eq!(enumerate_flags(&so7).unwrap().len(), 7);

        let so8 = GroupKind::so(8).unwrap();
        let flags = enumerate_flags(&so8).unwrap();
        let max_gr: Vec<_> =
            flags.iter().filter(|f| f.composition == c(&[4, 4])).collect();
        assert_eq!(max_gr.len(), 2);
    }

    #[test]
    fn index_sets() {
        let sp6 = GroupKind::sp(6).unwrap();
        assert_eq!(flag_to_index_set(&flag(sp6, &[1, 4, 1], None)).unwrap(), vec![1]);

        let so8 = GroupKind::so(8).unwrap();
        assert_eq!(
            flag_to_index_set(&flag(so8, &[1, 3, 3, 1], Some(PlusMinus::Plus))).unwrap(),
            vec![1, 4]
        );
        assert_eq!(
            flag_to_index_set(&flag(so8, &[1, 3, 3, 1], Some(PlusMinus::Minus))).unwrap(),
            vec![1, 3]
        );
        assert_eq!(
            flag_to_index_set(&flag(so8, &[1, 2, 2, 2, 1], None)).unwrap(),
            vec![1, 3, 4]
        );
        // maximal isotropic grassmannians
        assert_eq!(
            flag_to_index_set(&flag(so8, &[4, 4], Some(PlusMinus::Plus))).unwrap(),
            vec![4]
        );
        assert_eq!(
            flag_to_index_set(&flag(so8, &[4, 4], Some(PlusMinus::Minus))).unwrap(),
            vec![3]
        );
        // p even with unit middle parts
        assert_eq!(
            flag_to_index_set(&flag(so8, &[3, 1, 1, 3], None)).unwrap(),
            vec![3, 4]
        );
    }

    #[test]
    fn poset_sp4_and_minimal_elements() {
        let sp4 = GroupKind::sp(4).unwrap();
        let poset = flag_poset(&sp4).unwrap();
        assert_eq!(poset.classes.len(), 2);
        let min = minimal_classes(&sp4).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].members.len(), 2, "P(V) and SpGr_max coincide for n = 2");

        let so8 = GroupKind::so(8).unwrap();
        let min = minimal_classes(&so8).unwrap();
        assert_eq!(min.len(), 3);

        let so10 = GroupKind::so(10).unwrap();
        let min = minimal_classes(&so10).unwrap();
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn poset_is_partial_order() {
        for g in [GroupKind::sp(6).unwrap(), GroupKind::so(7).unwrap(), GroupKind::so(8).unwrap()]
        {
            let poset = flag_poset(&g).unwrap();
            let n = poset.classes.len();
            for i in 0..n {
                assert!(poset.leq[i][i]);
                for j in 0..n {
                    if i != j && poset.leq[i][j] {
                        assert!(!poset.leq[j][i], "antisymmetry");
                    }
                    for k in 0..n {
                        if poset.leq[i][j] && poset.leq[j][k] {
                            assert!(poset.leq[i][k], "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_representatives() {
        // the symplectic minimum is always the class of (1, 2n-2, 1)
        for n in 2..=5u32 {
            let g = GroupKind::sp(2 * n).unwrap();
            let min = minimal_classes(&g).unwrap();
            assert_eq!(min.len(), 1);
            assert!(min[0]
                .members
                .iter()
                .any(|f| f.composition == c(&[1, 2 * n - 2, 1])));
        }
    }
}
