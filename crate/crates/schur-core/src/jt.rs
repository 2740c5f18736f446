//! Jacobi-Trudi matrices, the pairwise box product, and minor readout.
//!
//! Four entry recipes share one determinant engine: plain and skew entries
//! specialize h_0 = 1 and h_k = 0 for k < 0 at construction time, the formal
//! recipe keeps every h_k free, and the quantum recipe produces shifted
//! t-symbols that can be specialized later.  A box matrix pairs two
//! compatible m-row matrices into a (2m+2) x (m+1) array whose square minors
//! are again determinants from the same family; `read_minor` recovers which
//! one, together with the row-sort parity and (for quantum entries) the
//! spectral shift.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::{determinant_of, RowLabel, SymMatrix};
use crate::partition::{PaddedPartition, Partition};
use crate::poly::{Mode, Polynomial, Symbol};
use crate::util::parity_between;

/// Entry recipe for a single Jacobi-Trudi style matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JtFamily {
    Plain,
    Formal,
    Skew { inner: Partition },
    Quantum { shift: i64 },
}

fn h_entry(degree: i64, formal: bool) -> Polynomial {
    if formal {
        Polynomial::symbol(Symbol::h(degree))
    } else if degree < 0 {
        Polynomial::zero()
    } else if degree == 0 {
        Polynomial::one()
    } else {
        Polynomial::symbol(Symbol::h(degree))
    }
}

/// The m x m matrix whose determinant is the Schur function of `lambda`
/// in the given family.  `m` may exceed the number of parts; the extra
/// rows correspond to zero parts and do not change the determinant.
pub fn jt_matrix(lambda: &Partition, m: usize, family: &JtFamily) -> SymMatrix {
    assert!(lambda.len() <= m, "need at least len(lambda) rows");
    if let JtFamily::Skew { inner } = family {
        assert!(lambda.contains(inner), "inner shape must fit inside outer");
    }
    let first = lambda.first() as i64;
    let mut mat = SymMatrix::new(m);
    for i in 1..=m {
        let li = lambda.part(i - 1) as i64;
        let mut row = Vec::with_capacity(m);
        for j in 1..=m {
            let (i, j) = (i as i64, j as i64);
            row.push(match family {
                JtFamily::Plain => h_entry(li - i + j, false),
                JtFamily::Formal => h_entry(li - i + j, true),
                JtFamily::Skew { inner } => {
                    let mj = inner.part(j as usize - 1) as i64;
                    h_entry(li - mj - i + j, false)
                }
                JtFamily::Quantum { shift } => {
                    let arg = shift + first - li + i + j - m as i64 - 1;
                    Polynomial::symbol(Symbol::t(li - i + j, arg))
                }
            });
        }
        mat.push_row(RowLabel::Row(i as u32), row);
    }
    mat
}

/// Determinant of `jt_matrix`.  `mode` selects whether quantum t-symbols
/// are specialized (t_0 = 1, t_k = 0 for k < 0) before expanding; plain
/// and skew entries are always specialized and formal entries never are.
pub fn schur_of(lambda: &Partition, m: usize, family: &JtFamily, mode: Mode) -> Polynomial {
    let mat = jt_matrix(lambda, m, family);
    let specialize = matches!(family, JtFamily::Quantum { .. }) && mode == Mode::Specialized;
    let rows: Vec<Vec<Polynomial>> = (1..=m)
        .map(|i| {
            let r = mat.row(RowLabel::Row(i as u32));
            if specialize {
                r.iter().map(|p| p.specialize(Mode::Specialized)).collect()
            } else {
                r.to_vec()
            }
        })
        .collect();
    let refs: Vec<&[Polynomial]> = rows.iter().map(|r| r.as_slice()).collect();
    determinant_of(&refs)
}

pub fn schur_plain(lambda: &Partition) -> Polynomial {
    schur_of(lambda, lambda.len(), &JtFamily::Plain, Mode::Specialized)
}

pub fn schur_skew(outer: &Partition, inner: &Partition) -> Polynomial {
    let family = JtFamily::Skew { inner: inner.clone() };
    schur_of(outer, outer.len(), &family, Mode::Specialized)
}

pub fn schur_quantum(lambda: &Partition, m: usize, shift: i64, mode: Mode) -> Polynomial {
    schur_of(lambda, m, &JtFamily::Quantum { shift }, mode)
}

/// Entry recipe for a box product.  The two sides must be compatible:
/// skew inner shapes have to agree on their shared gap pattern and quantum
/// shifts must satisfy b_1 + shift_b = a_1 + shift_a + 2, so that all rows
/// of the box land in a single equivalence class one size up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoxFamily {
    Plain,
    Formal,
    Skew { inner_a: Partition, inner_b: Partition },
    Quantum { shift_a: i64, shift_b: i64 },
}

/// The box product of two m-part Jacobi-Trudi matrices: m+1 columns and
/// 2m+2 rows labeled L, R, 1..m, 1'..m'.  Row L is (1,0,...,0), row R is
/// (0,...,0,(-1)^m); row i extends row i of the first matrix to the right,
/// row i' extends row i of the second matrix to the left.
#[derive(Clone, Debug)]
pub struct BoxMatrix {
    mat: SymMatrix,
    m: usize,
    family: BoxFamily,
    starts: BTreeMap<RowLabel, i64>,
    gaps: Vec<i64>,
    cum: Vec<i64>,
    k_class: Option<i64>,
}

pub fn box_matrix(a: &Partition, b: &Partition, m: usize, family: &BoxFamily) -> BoxMatrix {
    assert!(m >= 1 && a.len() <= m && b.len() <= m);
    let gaps: Vec<i64> = match family {
        BoxFamily::Plain | BoxFamily::Formal | BoxFamily::Quantum { .. } => vec![1; m],
        BoxFamily::Skew { inner_a, inner_b } => {
            assert!(a.contains(inner_a) && b.contains(inner_b));
            // normalize classes so the last inner part is zero
            assert!(inner_a.len() < m && inner_b.len() < m);
            let ga: Vec<i64> = (1..m)
                .map(|j| inner_a.part(j - 1) as i64 - inner_a.part(j) as i64 + 1)
                .collect();
            let gb: Vec<i64> = (1..m)
                .map(|j| inner_b.part(j - 1) as i64 - inner_b.part(j) as i64 + 1)
                .collect();
            if m == 1 {
                // both inner shapes are empty here; the one-column class is fixed
                vec![1]
            } else {
                assert_eq!(ga[1..], gb[..m - 2], "incompatible inner shapes");
                let mut gc = ga;
                gc.push(gb[m - 2]);
                gc
            }
        }
    };
    let mut cum = vec![0i64; m + 1];
    for j in 1..=m {
        cum[j] = cum[j - 1] + gaps[j - 1];
    }
    let k_class = match family {
        BoxFamily::Quantum { shift_a, shift_b } => {
            assert_eq!(
                b.first() as i64 + shift_b,
                a.first() as i64 + shift_a + 2,
                "incompatible quantum shifts"
            );
            Some(a.first() as i64 + shift_a + 1 - m as i64)
        }
        _ => None,
    };
    let (mu_a1, mu_b1) = match family {
        BoxFamily::Skew { inner_a, inner_b } => (inner_a.part(0) as i64, inner_b.part(0) as i64),
        _ => (0, 0),
    };
    let formal = matches!(family, BoxFamily::Formal);

    let mut mat = SymMatrix::new(m + 1);
    let mut starts = BTreeMap::new();
    let mut unit = vec![Polynomial::zero(); m + 1];
    unit[0] = Polynomial::one();
    mat.push_row(RowLabel::Left, unit);
    let mut unit = vec![Polynomial::zero(); m + 1];
    unit[m] = Polynomial::int(if m % 2 == 0 { 1 } else { -1 });
    mat.push_row(RowLabel::Right, unit);

    let mut push = |label: RowLabel, start: i64| {
        let row: Vec<Polynomial> = (0..=m)
            .map(|j| {
                let d = start + cum[j];
                match k_class {
                    Some(k) => Polynomial::symbol(Symbol::t(d, k - start + j as i64)),
                    None => h_entry(d, formal),
                }
            })
            .collect();
        starts.insert(label, start);
        mat.push_row(label, row);
    };
    for i in 1..=m {
        push(RowLabel::Row(i as u32), a.part(i - 1) as i64 - mu_a1 - i as i64 + 1);
    }
    for i in 1..=m {
        let start = b.part(i - 1) as i64 - mu_b1 - i as i64 + 1 - gaps[0];
        push(RowLabel::Primed(i as u32), start);
    }
    BoxMatrix { mat, m, family: family.clone(), starts, gaps, cum, k_class }
}

/// What a maximal square minor of a box matrix evaluates to: the sort
/// parity onto canonical row order, the partition read off the sorted
/// starts (raw, may end in zeros or dip below zero), the inner shape in
/// the skew family, and the quantum shift when t-entries are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorForm {
    pub rows_canonical: Vec<RowLabel>,
    pub parity: i32,
    pub kappa_raw: Vec<i64>,
    pub inner: Partition,
    pub shift: Option<i64>,
    pub duplicate: bool,
}

impl MinorForm {
    /// True when the raw read is an actual partition pair, i.e. the minor
    /// is (up to sign) a member of the family.
    pub fn is_valid_shape(&self) -> bool {
        !self.duplicate
            && self.kappa_raw.last().map_or(true, |&k| k >= 0)
            && self.kappa().map_or(false, |k| k.contains(&self.inner))
    }

    pub fn kappa(&self) -> Option<Partition> {
        if self.duplicate || self.kappa_raw.last().map_or(false, |&k| k < 0) {
            return None;
        }
        Some(Partition::new(self.kappa_raw.iter().map(|&k| k as u32).collect()))
    }

    /// The raw read with explicit zero parts kept, for quantum use.
    pub fn padded(&self) -> Option<PaddedPartition> {
        self.kappa()?;
        let raw: Vec<u32> = self.kappa_raw.iter().map(|&k| k as u32).collect();
        Some(PaddedPartition::from_raw(&raw))
    }
}

impl BoxMatrix {
    pub fn matrix(&self) -> &SymMatrix {
        &self.mat
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn family(&self) -> &BoxFamily {
        &self.family
    }

    pub fn start(&self, label: RowLabel) -> i64 {
        self.starts[&label]
    }

    /// Pairs of coinciding rows.  Equal starts force equal rows because
    /// every row follows the same gap pattern.
    pub fn duplicate_rows(&self) -> Vec<(RowLabel, RowLabel)> {
        let mut out = Vec::new();
        let labels: Vec<RowLabel> = self.starts.keys().copied().collect();
        for (idx, &la) in labels.iter().enumerate() {
            for &lb in &labels[idx + 1..] {
                if self.starts[&la] == self.starts[&lb] {
                    out.push((la, lb));
                }
            }
        }
        out
    }

    /// Determinant of the named rows in listed order.  For quantum boxes
    /// `mode` selects specialized or fully formal t-entries.
    pub fn minor_det(&self, rows: &[RowLabel], mode: Mode) -> Polynomial {
        let specialize = self.k_class.is_some() && mode == Mode::Specialized;
        let owned: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|&l| {
                let r = self.mat.row(l);
                if specialize {
                    r.iter().map(|p| p.specialize(Mode::Specialized)).collect()
                } else {
                    r.to_vec()
                }
            })
            .collect();
        let refs: Vec<&[Polynomial]> = owned.iter().map(|r| r.as_slice()).collect();
        determinant_of(&refs)
    }

    /// Identify the family member equal (up to the reported parity) to the
    /// minor on the listed rows.  The canonical row order is R, then L,
    /// then the remaining rows by strictly decreasing start.
    pub fn read_minor(&self, rows: &[RowLabel]) -> MinorForm {
        assert_eq!(rows.len(), self.m + 1, "minor must use every column");
        let has_l = rows.contains(&RowLabel::Left);
        let has_r = rows.contains(&RowLabel::Right);
        let mut body: Vec<RowLabel> = rows
            .iter()
            .copied()
            .filter(|&l| l != RowLabel::Left && l != RowLabel::Right)
            .collect();
        let mut duplicate = rows.len()
            != {
                let mut seen = rows.to_vec();
                seen.sort();
                seen.dedup();
                seen.len()
            };
        body.sort_by_key(|&l| (-self.starts[&l], l));
        for w in body.windows(2) {
            if self.starts[&w[0]] == self.starts[&w[1]] {
                duplicate = true;
            }
        }
        let mut canonical = Vec::with_capacity(rows.len());
        if has_r {
            canonical.push(RowLabel::Right);
        }
        if has_l {
            canonical.push(RowLabel::Left);
        }
        canonical.extend_from_slice(&body);
        let parity = if duplicate { 1 } else { parity_between(rows, &canonical) };

        let q = body.len();
        let lo = usize::from(has_l);
        // block gaps sit between the surviving columns; suffix sums of
        // (gap - 1) rebuild the inner shape from the right edge inward
        let ghat: &[i64] =
            if q == 0 { &[] } else { &self.gaps[lo..self.m - usize::from(has_r)] };
        let mut mu_hat = vec![0i64; q.max(1)];
        for t in (0..q.saturating_sub(1)).rev() {
            mu_hat[t] = mu_hat[t + 1] + ghat[t] - 1;
        }
        let kappa_raw: Vec<i64> = body
            .iter()
            .enumerate()
            .map(|(t, &l)| self.starts[&l] + self.cum[lo] + mu_hat[0] + t as i64)
            .collect();
        let inner = Partition::new(mu_hat.iter().take(q).map(|&v| v as u32).collect());
        let shift = match (self.k_class, q) {
            (Some(k), _) if q >= 1 => {
                Some(k - self.starts[&body[0]] + lo as i64 + q as i64 - 1)
            }
            _ => None,
        };
        MinorForm { rows_canonical: canonical, parity, kappa_raw, inner, shift, duplicate }
    }
}

/// Rewrite a specialized plain polynomial as an integer combination of
/// Schur functions.  Repeatedly peel the monomial whose sorted subscript
/// vector is lexicographically smallest; every other monomial of that
/// Schur function's determinant sorts strictly larger, so the loop
/// terminates within each degree.
pub fn schur_decompose(poly: &Polynomial) -> Vec<(Partition, BigInt)> {
    let mut rest = poly.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let mut best: Option<(Vec<i64>, BigInt)> = None;
        for (mono, coeff) in rest.terms() {
            let mut subs: Vec<i64> = Vec::new();
            for &(sym, e) in mono.factors() {
                match sym {
                    Symbol::H { degree } => {
                        assert!(degree > 0, "not a specialized plain polynomial");
                        for _ in 0..e {
                            subs.push(degree);
                        }
                    }
                    Symbol::T { .. } => panic!("not a plain polynomial"),
                }
            }
            subs.sort_unstable_by(|a, b| b.cmp(a));
            if best.as_ref().map_or(true, |(b, _)| subs < *b) {
                best = Some((subs, coeff.clone()));
            }
        }
        let (subs, coeff) = best.unwrap();
        let mu = Partition::new(subs.iter().map(|&d| d as u32).collect());
        rest = &rest - &schur_plain(&mu).scale(&coeff);
        out.push((mu, coeff));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.retain(|(_, c)| !c.is_zero());
    out
}
