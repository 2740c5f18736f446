//! Bilinear identities on Schur functions and the discrete evolution they
//! generate.
//!
//! `main_identity` expresses s_lambda * s_lambda through the pair
//! s_{lambda + omega_ell} * s_{lambda - omega_ell} and one signed product per
//! interval chain at the chosen corner. `quantum_identity` decorates the same
//! list with spectral-parameter shifts. `verify_identity` expands everything
//! back to determinants and also matches the list against the exchange
//! relation it came from. `Evolver` runs the identity as a recurrence,
//! solving for the widest shape by exact division.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use crate::jt::{schur_of, schur_plain, JtFamily};
use crate::partition::{IntervalChain, PaddedPartition, Partition};
use crate::plucker::{box_relation, BoxTermKind, RelationFamily};
use crate::poly::{Mode, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermKind {
    /// s_lambda * s_lambda, the squared side.
    Square,
    /// s_{lambda + omega_ell} * s_{lambda - omega_ell}.
    Fundamental,
    Chain(IntervalChain),
}

/// One product in a bilinear identity. Partitions keep their padding zeros;
/// shifts are offsets from u and are zero throughout a plain identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirotaTerm {
    pub kind: TermKind,
    pub alpha: PaddedPartition,
    pub beta: PaddedPartition,
    pub sign: i32,
    pub shift_left: i64,
    pub shift_right: i64,
}

impl HirotaTerm {
    /// Zeroes the shifts, projecting a quantum term onto its plain shadow.
    pub fn forget_shift(&self) -> HirotaTerm {
        HirotaTerm {
            shift_left: 0,
            shift_right: 0,
            ..self.clone()
        }
    }

    /// Drops padding zeros, lowering the shift once per zero dropped.
    pub fn zero_free(&self) -> HirotaTerm {
        let strip = |pp: &PaddedPartition, shift: i64| -> (PaddedPartition, i64) {
            (
                PaddedPartition::new(pp.shape.clone(), 0),
                shift - pp.zeros as i64,
            )
        };
        let (alpha, shift_left) = strip(&self.alpha, self.shift_left);
        let (beta, shift_right) = strip(&self.beta, self.shift_right);
        HirotaTerm {
            kind: self.kind.clone(),
            alpha,
            beta,
            sign: self.sign,
            shift_left,
            shift_right,
        }
    }
}

fn build_identity(lambda: &Partition, k: usize, quantum: bool) -> Vec<HirotaTerm> {
    let cc = lambda.to_corners();
    let n = cc.n();
    assert!(1 <= k && k <= n, "corner index {k} out of 1..={n}");
    let ell = cc.pairs[k - 1].1 as usize;
    let m = lambda.len();
    let l1 = lambda.first() as i64;

    let plain = PaddedPartition::new(lambda.clone(), 0);
    let mut terms = Vec::new();
    let (sl, sr) = if quantum { (-1, 1) } else { (0, 0) };
    terms.push(HirotaTerm {
        kind: TermKind::Square,
        alpha: plain.clone(),
        beta: plain,
        sign: 1,
        shift_left: sl,
        shift_right: sr,
    });

    let b = lambda.add_column(ell);
    let a = lambda.remove_column(ell).expect("ell is a corner height");
    terms.push(HirotaTerm {
        kind: TermKind::Fundamental,
        alpha: PaddedPartition::new(b, 0),
        beta: PaddedPartition::new(a.clone(), m - a.len()),
        sign: 1,
        shift_left: 0,
        shift_right: 0,
    });

    for chain in IntervalChain::enumerate(n, k) {
        let alpha = cc.push(&chain);
        let beta = cc.pull(&chain);
        assert_eq!(alpha.zeros, 0, "a pushed shape never pads");
        let (sl, sr) = if quantum {
            let b1 = beta.raw_first().map_or(l1, i64::from);
            if chain.outer_j() == n {
                (0, l1 - b1)
            } else {
                (-1, l1 - b1 + 1)
            }
        } else {
            (0, 0)
        };
        terms.push(HirotaTerm {
            kind: TermKind::Chain(chain.clone()),
            alpha,
            beta,
            sign: chain.sign(),
            shift_left: sl,
            shift_right: sr,
        });
    }

    // Nothing on the right grows new corners, and only lambda + omega_ell
    // grows a new column.
    for (i, t) in terms.iter().enumerate() {
        assert!(t.alpha.shape.corner_count() <= n);
        assert!(t.beta.shape.corner_count() <= n);
        assert!(t.beta.shape.first() <= lambda.first());
        if i == 1 {
            assert_eq!(t.alpha.shape.first(), lambda.first() + 1);
        } else {
            assert!(t.alpha.shape.first() <= lambda.first());
        }
    }
    terms
}

/// The plain identity at the kth-shortest column height. Term 0 is the
/// squared side; the rest carry the right-hand side with its signs.
pub fn main_identity(lambda: &Partition, k: usize) -> Vec<HirotaTerm> {
    build_identity(lambda, k, false)
}

/// The same identity with spectral parameters. The squared side splits into
/// shifts u-1 and u+1; each chain term carries the shift pair dictated by
/// its outermost interval.
pub fn quantum_identity(lambda: &Partition, k: usize) -> Vec<HirotaTerm> {
    build_identity(lambda, k, true)
}

/// Everything `verify_identity` established about one term list.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub lambda: Partition,
    pub k: usize,
    pub ell: usize,
    pub quantum: bool,
    /// Squared side minus the right-hand side, expanded through determinants.
    pub residual: Polynomial,
}

impl VerifyReport {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

/// A term list that disagrees with the exchange relation it should mirror.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub reason: String,
}

fn mismatch(index: usize, reason: &str) -> Mismatch {
    Mismatch {
        index,
        reason: String::from(reason),
    }
}

/// Expands every product through Jacobi-Trudi determinants and returns the
/// residual, after first matching the list term-by-term against the
/// exchange relation on the corresponding box. `terms` must come from
/// `main_identity` or `quantum_identity`.
pub fn verify_identity(terms: &[HirotaTerm], mode: Mode) -> Result<VerifyReport, Mismatch> {
    if terms.len() < 2 {
        return Err(mismatch(0, "identity needs a square and a fundamental term"));
    }
    if terms[0].kind != TermKind::Square {
        return Err(mismatch(0, "term 0 is not the squared side"));
    }
    if terms[1].kind != TermKind::Fundamental {
        return Err(mismatch(1, "term 1 is not the fundamental product"));
    }
    let lambda = terms[0].alpha.shape.clone();
    let quantum = terms[0].shift_left != 0;
    assert!(
        quantum || mode == Mode::Specialized,
        "the plain identity lives in the specialized ring"
    );

    // The fundamental term names the column height being exchanged.
    let fund = &terms[1].alpha.shape;
    let ell = (0..fund.len())
        .take_while(|&i| fund.part(i) == lambda.part(i) + 1)
        .count();
    if fund != &lambda.add_column(ell) {
        return Err(mismatch(1, "fundamental term is not lambda plus a column"));
    }
    let cc = lambda.to_corners();
    let n = cc.n();
    let k = match (1..=n).find(|&t| cc.pairs[t - 1].1 == ell as i64) {
        Some(k) => k,
        None => return Err(mismatch(1, "exchanged height is not a corner height")),
    };

    let family = if quantum {
        RelationFamily::Quantum
    } else {
        RelationFamily::Plain
    };
    let rel = box_relation(&lambda, ell, family).expect("ell is a corner height");
    if rel.terms.len() != terms.len() {
        return Err(mismatch(terms.len() - 1, "term count differs from the exchange relation"));
    }
    for (i, (ht, bt)) in terms.iter().zip(rel.terms.iter()).enumerate() {
        let kinds_agree = match (&ht.kind, &bt.kind) {
            (TermKind::Square, BoxTermKind::Square) => true,
            (TermKind::Fundamental, BoxTermKind::Fundamental) => true,
            (TermKind::Chain(c), BoxTermKind::Chain(d)) => c == d,
            _ => false,
        };
        if !kinds_agree {
            return Err(mismatch(i, "term kind differs from the exchange relation"));
        }
        if bt.left_form.padded().as_ref() != Some(&ht.alpha)
            || bt.right_form.padded().as_ref() != Some(&ht.beta)
        {
            return Err(mismatch(i, "partitions differ from the exchange minors"));
        }
        let expected_sign = if i == 0 { 1 } else { bt.identity_sign };
        if ht.sign != expected_sign {
            return Err(mismatch(i, "sign differs from the exchange relation"));
        }
        if quantum {
            if bt.left_form.shift != Some(ht.shift_left) {
                return Err(mismatch(i, "left shift differs from the exchange minors"));
            }
            if !bt.right_form.kappa_raw.is_empty() && bt.right_form.shift != Some(ht.shift_right) {
                return Err(mismatch(i, "right shift differs from the exchange minors"));
            }
        }
    }

    let value = |pp: &PaddedPartition, shift: i64| -> Polynomial {
        let family = if quantum {
            JtFamily::Quantum { shift }
        } else {
            JtFamily::Plain
        };
        schur_of(&pp.shape, pp.raw_len(), &family, mode)
    };
    let mut residual = {
        let t = &terms[0];
        &value(&t.alpha, t.shift_left) * &value(&t.beta, t.shift_right)
    };
    for t in &terms[1..] {
        let p = &value(&t.alpha, t.shift_left) * &value(&t.beta, t.shift_right);
        let signed = if t.sign >= 0 { p } else { -&p };
        residual = &residual - &signed;
    }
    Ok(VerifyReport {
        lambda,
        k,
        ell,
        quantum,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Seed,
    /// Solved from the identity on `base` at column height `ell`.
    Evolved { base: Partition, ell: usize },
}

/// A lattice value the evolver has established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QState {
    pub target: Partition,
    pub value: Polynomial,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvolveError {
    /// A shape with pairwise distinct column heights was needed but not seeded.
    MissingSeed(Partition),
    /// The defining division left a remainder; some seed value is wrong.
    InexactDivision(Partition),
}

impl core::fmt::Display for EvolveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EvolveError::MissingSeed(p) => write!(f, "missing seed for {p}"),
            EvolveError::InexactDivision(p) => write!(f, "inexact division solving for {p}"),
        }
    }
}

/// Smallest column height occurring at least twice, if any. Shapes without
/// one are exactly the admissible seeds.
fn repeated_height(p: &Partition) -> Option<usize> {
    let conj = p.conjugate();
    let mut best: Option<usize> = None;
    let mut i = 0;
    let parts = conj.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i >= 2 {
            best = Some(parts[i] as usize);
        }
        i = j;
    }
    best
}

/// Runs the identity as a recurrence: the widest shape of each instance is
/// solved for by exact division, working down to seeded shapes. Values are
/// memoized by shape, so evolution order cannot change any result.
pub struct Evolver {
    seeds: BTreeMap<Partition, Polynomial>,
    memo: BTreeMap<Partition, QState>,
}

impl Evolver {
    pub fn new(seeds: BTreeMap<Partition, Polynomial>) -> Evolver {
        Evolver {
            seeds,
            memo: BTreeMap::new(),
        }
    }

    pub fn evolve(&mut self, target: &Partition) -> Result<QState, EvolveError> {
        if let Some(st) = self.memo.get(target) {
            return Ok(st.clone());
        }
        if let Some(v) = self.seeds.get(target) {
            let st = QState {
                target: target.clone(),
                value: v.clone(),
                provenance: Provenance::Seed,
            };
            self.memo.insert(target.clone(), st.clone());
            return Ok(st);
        }
        let ell = repeated_height(target).ok_or_else(|| EvolveError::MissingSeed(target.clone()))?;
        let base = target.remove_column(ell).expect("height occurs twice");
        let cc = base.to_corners();
        let k = (1..=cc.n())
            .find(|&t| cc.pairs[t - 1].1 == ell as i64)
            .expect("height still present in base");
        let terms = main_identity(&base, k);
        debug_assert_eq!(&terms[1].alpha.shape, target);

        let sq = self.evolve(&base)?.value;
        let mut num = &sq * &sq;
        for t in &terms[2..] {
            let p = &self.evolve(&t.alpha.shape)?.value * &self.evolve(&t.beta.shape)?.value;
            let signed = if t.sign >= 0 { p } else { -&p };
            num = &num - &signed;
        }
        let den = self.evolve(&terms[1].beta.shape)?.value;
        let value = num
            .exact_div(&den)
            .ok_or_else(|| EvolveError::InexactDivision(target.clone()))?;
        let st = QState {
            target: target.clone(),
            value,
            provenance: Provenance::Evolved { base, ell },
        };
        self.memo.insert(target.clone(), st.clone());
        Ok(st)
    }
}

/// Every seed shape the evolution of `target` will touch.
pub fn required_seeds(target: &Partition) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    fn walk(p: &Partition, out: &mut BTreeSet<Partition>) {
        match repeated_height(p) {
            None => {
                out.insert(p.clone());
            }
            Some(ell) => {
                let base = p.remove_column(ell).expect("height occurs twice");
                let cc = base.to_corners();
                let k = (1..=cc.n())
                    .find(|&t| cc.pairs[t - 1].1 == ell as i64)
                    .expect("height still present in base");
                let terms = main_identity(&base, k);
                walk(&base, out);
                walk(&terms[1].beta.shape, out);
                for t in &terms[2..] {
                    walk(&t.alpha.shape, out);
                    walk(&t.beta.shape, out);
                }
            }
        }
    }
    walk(target, &mut out);
    out
}

/// Seeds every shape `target` needs with its determinant value.
pub fn determinant_seeds(target: &Partition) -> BTreeMap<Partition, Polynomial> {
    required_seeds(target)
        .into_iter()
        .map(|p| {
            let v = schur_plain(&p);
            (p, v)
        })
        .collect()
}

/// Seeds the single-column shapes only, heights 0..=max_height.
pub fn column_seeds(max_height: usize) -> BTreeMap<Partition, Polynomial> {
    (0..=max_height)
        .map(|j| {
            let p = Partition::new(alloc::vec![1; j]);
            let v = schur_plain(&p);
            (p, v)
        })
        .collect()
}

/// The two-dimensional lattice of rectangle values Q_m^ell(u), grown from
/// Q_0 = 1 and the single-column determinants by
/// Q_{m+1}^ell(u) Q_{m-1}^ell(u) = Q_m^ell(u-1) Q_m^ell(u+1)
///                                  - Q_m^{ell+1}(u) Q_m^{ell-1}(u).
/// Levels are computed on a pyramid wide enough that every division has its
/// operands; keys are (m, ell) with ell <= max_ell + max_m - m.
pub fn quantum_rectangle_ladder(
    max_m: usize,
    max_ell: usize,
) -> Result<BTreeMap<(usize, usize), Polynomial>, EvolveError> {
    let mut q: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
    let width = |m: usize| max_ell + max_m - m;
    for ell in 0..=width(0) {
        q.insert((0, ell), Polynomial::one());
    }
    if max_m == 0 {
        return Ok(q);
    }
    for ell in 0..=width(1) {
        let col = Partition::new(alloc::vec![1; ell]);
        let v = schur_of(&col, ell, &JtFamily::Quantum { shift: 0 }, Mode::Specialized);
        q.insert((1, ell), v);
    }
    for m in 1..max_m {
        q.insert((m + 1, 0), Polynomial::one());
        for ell in 1..=width(m + 1) {
            let cur = &q[&(m, ell)];
            let num = &(&cur.shift_u(-1) * &cur.shift_u(1))
                - &(&q[&(m, ell + 1)] * &q[&(m, ell - 1)]);
            let den = &q[&(m - 1, ell)];
            let rect = Partition::new(alloc::vec![(m + 1) as u32; ell]);
            let v = num
                .exact_div(den)
                .ok_or(EvolveError::InexactDivision(rect))?;
            q.insert((m + 1, ell), v);
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jt::schur_quantum;
    use crate::partition::Interval;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn raw_pairs(terms: &[HirotaTerm]) -> Vec<(Vec<u32>, Vec<u32>)> {
        terms
            .iter()
            .map(|t| (t.alpha.raw_parts(), t.beta.raw_parts()))
            .collect()
    }

    #[test]
    fn seven_term_identity() {
        let terms = main_identity(&p(&[3, 2, 1]), 2);
        assert_eq!(
            raw_pairs(&terms),
            vec![
                (vec![3, 2, 1], vec![3, 2, 1]),
                (vec![4, 3, 1], vec![2, 1, 1]),
                (vec![3, 2, 2], vec![3, 1, 1]),
                (vec![3, 3, 3], vec![1, 1, 1]),
                (vec![3, 2, 2, 2], vec![3, 0]),
                (vec![3, 3, 3, 2], vec![1, 0]),
                (vec![3, 3, 3, 3], vec![0, 0]),
            ]
        );
        let signs: Vec<i32> = terms.iter().map(|t| t.sign).collect();
        assert_eq!(signs, vec![1, 1, 1, 1, 1, 1, -1]);
        assert!(terms.iter().all(|t| (t.shift_left, t.shift_right) == (0, 0)));
    }

    #[test]
    fn rectangle_identity_is_the_classic_one() {
        let terms = main_identity(&p(&[2, 2]), 1);
        assert_eq!(
            raw_pairs(&terms),
            vec![
                (vec![2, 2], vec![2, 2]),
                (vec![3, 3], vec![1, 1]),
                (vec![2, 2, 2], vec![2]),
            ]
        );
        assert_eq!(terms[2].kind, TermKind::Chain(IntervalChain {
            k: 1,
            intervals: alloc::vec![Interval { i: 1, j: 1 }],
        }));
    }

    #[test]
    fn two_corner_shape_chains() {
        let terms = main_identity(&p(&[2, 1]), 1);
        assert_eq!(
            raw_pairs(&terms),
            vec![
                (vec![2, 1], vec![2, 1]),
                (vec![3, 1], vec![1, 1]),
                (vec![2, 2], vec![1, 1]),
                (vec![2, 2, 2], vec![0]),
            ]
        );
    }

    #[test]
    fn quantum_shift_table() {
        let terms = quantum_identity(&p(&[3, 2, 1]), 2);
        let shifts: Vec<(i64, i64)> =
            terms.iter().map(|t| (t.shift_left, t.shift_right)).collect();
        assert_eq!(
            shifts,
            vec![(-1, 1), (0, 0), (-1, 1), (-1, 3), (0, 0), (0, 2), (0, 3)]
        );
        let plain: Vec<HirotaTerm> = terms.iter().map(HirotaTerm::forget_shift).collect();
        assert_eq!(plain, main_identity(&p(&[3, 2, 1]), 2));
    }

    #[test]
    fn zero_free_presentation() {
        let terms = quantum_identity(&p(&[3, 2, 1]), 2);
        let t = terms[4].zero_free();
        assert_eq!(t.beta.raw_parts(), vec![3]);
        assert_eq!(t.shift_right, -1);
        let t = terms[6].zero_free();
        assert!(t.beta.raw_parts().is_empty());
        assert_eq!(t.shift_right, 1);
        // both presentations specialize to the same polynomial
        for t in &terms {
            let z = t.zero_free();
            let val = |pp: &PaddedPartition, s: i64| {
                schur_of(&pp.shape, pp.raw_len(), &JtFamily::Quantum { shift: s }, Mode::Specialized)
            };
            assert_eq!(val(&t.beta, t.shift_right), val(&z.beta, z.shift_right));
        }
    }

    #[test]
    fn identities_expand_to_zero() {
        for (lam, k) in [
            (p(&[2, 1]), 1),
            (p(&[2, 1]), 2),
            (p(&[2, 2]), 1),
            (p(&[3, 2, 1]), 2),
            (p(&[1]), 1),
        ] {
            let rep = verify_identity(&main_identity(&lam, k), Mode::Specialized).unwrap();
            assert!(rep.is_zero(), "{lam} k={k}");
            assert!(!rep.quantum);
            let rep = verify_identity(&quantum_identity(&lam, k), Mode::Specialized).unwrap();
            assert!(rep.is_zero(), "{lam} k={k} quantum");
            assert!(rep.quantum);
        }
        let rep = verify_identity(&quantum_identity(&p(&[3, 2, 1]), 2), Mode::Formal).unwrap();
        assert!(rep.is_zero());
        assert_eq!((rep.k, rep.ell), (2, 2));
    }

    #[test]
    fn tampering_is_reported() {
        let mut terms = main_identity(&p(&[2, 2]), 1);
        terms[2].sign = -1;
        let err = verify_identity(&terms, Mode::Specialized).unwrap_err();
        assert_eq!(err.index, 2);
        let mut terms = main_identity(&p(&[2, 1]), 1);
        terms[3].beta = PaddedPartition::new(p(&[1]), 1);
        let err = verify_identity(&terms, Mode::Specialized).unwrap_err();
        assert_eq!(err.index, 3);
    }

    #[test]
    fn evolve_matches_determinants() {
        let mut ev = Evolver::new(column_seeds(4));
        let st = ev.evolve(&p(&[2, 2])).unwrap();
        assert_eq!(st.value, schur_plain(&p(&[2, 2])));
        assert_eq!(
            st.provenance,
            Provenance::Evolved {
                base: p(&[1, 1]),
                ell: 2
            }
        );

        for target in [p(&[3, 3, 2]), p(&[4, 2, 2]), p(&[3, 3, 3])] {
            let mut ev = Evolver::new(determinant_seeds(&target));
            let st = ev.evolve(&target).unwrap();
            assert_eq!(st.value, schur_plain(&target), "{target}");
        }
    }

    #[test]
    fn seeds_are_returned_unchanged() {
        let mut ev = Evolver::new(determinant_seeds(&p(&[2, 1])));
        let st = ev.evolve(&p(&[2, 1])).unwrap();
        assert_eq!(st.provenance, Provenance::Seed);
        assert_eq!(st.value, schur_plain(&p(&[2, 1])));
    }

    #[test]
    fn missing_seed_is_named() {
        let mut ev = Evolver::new(BTreeMap::new());
        let err = ev.evolve(&p(&[2, 2])).unwrap_err();
        assert_eq!(err, EvolveError::MissingSeed(p(&[1, 1])));
    }

    #[test]
    fn poisoned_seed_fails_division() {
        let mut seeds = determinant_seeds(&p(&[2, 2]));
        seeds.insert(p(&[]), Polynomial::int(2));
        let mut ev = Evolver::new(seeds);
        let err = ev.evolve(&p(&[2, 2])).unwrap_err();
        assert_eq!(err, EvolveError::InexactDivision(p(&[2, 2])));
    }

    #[test]
    fn evolution_order_cannot_matter() {
        let targets = [p(&[3, 3]), p(&[2, 2]), p(&[3, 2, 2])];
        let seeds: BTreeMap<Partition, Polynomial> = targets
            .iter()
            .flat_map(|t| determinant_seeds(t))
            .collect();
        let mut fwd = Evolver::new(seeds.clone());
        let mut rev = Evolver::new(seeds);
        let a: Vec<Polynomial> = targets.iter().map(|t| fwd.evolve(t).unwrap().value).collect();
        let mut b: Vec<Polynomial> = targets
            .iter()
            .rev()
            .map(|t| rev.evolve(t).unwrap().value)
            .collect();
        b.reverse();
        assert_eq!(a, b);
        // a second query returns the memoized state
        assert_eq!(fwd.evolve(&targets[0]).unwrap().value, a[0]);
    }

    #[test]
    fn rectangle_ladder_reaches_the_determinants() {
        let q = quantum_rectangle_ladder(3, 3).unwrap();
        for m in 0..=3usize {
            for ell in 0..=3usize {
                let rect = Partition::new(alloc::vec![m as u32; ell]);
                let want = schur_quantum(&rect, ell, 0, Mode::Specialized);
                assert_eq!(q[&(m, ell)], want, "m={m} ell={ell}");
            }
        }
    }
}
