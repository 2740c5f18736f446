//! Plucker exchange relations among maximal minors of a (2n) x n matrix.
//! A bracket [r_1 ... r_n] is the determinant of the listed rows in listed
//! order, so brackets are alternating in their arguments.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;
use crate::jt::{box_matrix, BoxFamily, BoxMatrix, MinorForm};
use crate::matrix::RowLabel;
use crate::partition::{IntervalChain, NoSuchColumn, Partition};
use crate::poly::{Mode, Polynomial};
use crate::util::{combinations, parity_between};

/// One product of two brackets. Row lists are positional: the determinant is
/// taken in the listed order and `sign` multiplies the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerTerm {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub sign: i32,
}

impl PluckerTerm {
    /// Same term with both row lists sorted ascending and the sign adjusted
    /// by the two sort parities.
    pub fn normalized(&self) -> PluckerTerm {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        let mut sorted_l = left.clone();
        sorted_l.sort_unstable();
        let mut sorted_r = right.clone();
        sorted_r.sort_unstable();
        let sign = self.sign * parity_between(&left, &sorted_l) * parity_between(&right, &sorted_r);
        left = sorted_l;
        right = sorted_r;
        PluckerTerm { left, right, sign }
    }
}

/// The exchange relation lhs = sum(rhs) obtained by swapping a fixed set of
/// positions of the first bracket against every same-size subset of the
/// second bracket's rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerRelation {
    pub n: usize,
    /// Swapped positions inside the first bracket, ascending, 1-based.
    pub swap: Vec<usize>,
    pub lhs: PluckerTerm,
    pub rhs: Vec<PluckerTerm>,
}

/// Builds the relation for row set X = 1..n, Y = n+1..2n. For each k-subset
/// S of Y (k = swap size, subsets in lexicographic order) the rows of X at
/// the swapped positions are exchanged in place with the rows of S, and the
/// displaced rows take the vacated places of Y. All terms carry sign +1.
pub fn generate(n: usize, swap: &[usize]) -> PluckerRelation {
    let mut swap: Vec<usize> = swap.to_vec();
    swap.sort_unstable();
    swap.dedup();
    assert!(!swap.is_empty() && *swap.last().unwrap() <= n, "swap positions must lie in 1..=n");
    let k = swap.len();
    let x: Vec<usize> = (1..=n).collect();
    let y: Vec<usize> = (n + 1..=2 * n).collect();
    let lhs = PluckerTerm {
        left: x.clone(),
        right: y.clone(),
        sign: 1,
    };
    let mut rhs = Vec::new();
    for s in combinations(&y, k) {
        let mut left = x.clone();
        let mut right = y.clone();
        for (i, &row) in s.iter().enumerate() {
            left[swap[i] - 1] = row;
            right[row - n - 1] = swap[i];
        }
        rhs.push(PluckerTerm {
            left,
            right,
            sign: 1,
        });
    }
    PluckerRelation { n, swap, lhs, rhs }
}

impl PluckerRelation {
    /// lhs minus the rhs sum, with brackets supplied by `minor` on listed
    /// row orders. Zero iff the relation holds for that bracket valuation.
    pub fn residual<F: FnMut(&[usize]) -> Polynomial>(&self, mut minor: F) -> Polynomial {
        let value = |term: &PluckerTerm, minor: &mut F| -> Polynomial {
            let p = &minor(&term.left) * &minor(&term.right);
            if term.sign >= 0 {
                p
            } else {
                -&p
            }
        };
        let mut acc = value(&self.lhs, &mut minor);
        for t in &self.rhs {
            acc = &acc - &value(t, &mut minor);
        }
        acc
    }
}

/// Determinant of the listed rows of `mat` (2n rows by n columns), rows
/// 1-based.
pub fn numeric_minor(mat: &[Vec<BigInt>], rows: &[usize]) -> BigInt {
    let n = rows.len();
    let picked: Vec<&[BigInt]> = rows.iter().map(|&r| mat[r - 1].as_slice()).collect();
    for r in &picked {
        assert!(r.len() == n);
    }
    det_numeric(&picked, (1u64 << n) - 1, n)
}

fn det_numeric(rows: &[&[BigInt]], mask: u64, n: usize) -> BigInt {
    if mask == 0 {
        return BigInt::from(1);
    }
    let col = n - mask.count_ones() as usize;
    let mut acc = BigInt::zero();
    let mut pos = 0u32;
    for r in 0..n {
        if mask & (1 << r) == 0 {
            continue;
        }
        let e = &rows[r][col];
        if !e.is_zero() {
            let sub = det_numeric(rows, mask & !(1 << r), n);
            if pos % 2 == 0 {
                acc += e * sub;
            } else {
                acc -= e * sub;
            }
        }
        pos += 1;
    }
    acc
}

/// Residual of the relation against a concrete integer matrix with 2n rows
/// and n columns. Zero for every matrix.
pub fn verify(rel: &PluckerRelation, mat: &[Vec<BigInt>]) -> BigInt {
    assert_eq!(mat.len(), 2 * rel.n);
    let term_value = |t: &PluckerTerm| -> BigInt {
        let v = numeric_minor(mat, &t.left) * numeric_minor(mat, &t.right);
        if t.sign >= 0 {
            v
        } else {
            -v
        }
    };
    let mut acc = term_value(&rel.lhs);
    for t in &rel.rhs {
        acc -= term_value(t);
    }
    acc
}

/// Entry family for the box carrying a bilinear Schur identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationFamily {
    Plain,
    Formal,
    Quantum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoxTermKind {
    /// s_lambda * s_lambda, the term moved to the left-hand side.
    Square,
    /// s_{lambda + omega} * s_{lambda - omega}.
    Fundamental,
    /// One nested interval chain, weighted (-1)^(r-1).
    Chain(IntervalChain),
    /// Exchange whose brackets repeat a row; contributes zero.
    Vanishing,
}

/// One bracket product of the relation, with both minors identified.
#[derive(Clone, Debug)]
pub struct BoxTerm {
    pub kind: BoxTermKind,
    pub left_rows: Vec<RowLabel>,
    pub right_rows: Vec<RowLabel>,
    pub left_form: MinorForm,
    pub right_form: MinorForm,
    /// Coefficient carried by the term once the square is isolated:
    /// square = fundamental + sum over chains of (-1)^(r-1) s_pi s_mu.
    pub identity_sign: i32,
}

/// The exchange relation on the box of `lambda - omega_ell` and
/// `lambda + omega_ell`, with every surviving bracket product matched to a
/// chain term and every other exchange shown to vanish.
#[derive(Clone, Debug)]
pub struct BoxRelation {
    pub lambda: Partition,
    pub ell: usize,
    /// Corner index with y_k = ell.
    pub k: usize,
    /// Corner count of lambda.
    pub n: usize,
    /// Row count of each factor, len(lambda).
    pub m: usize,
    pub family: RelationFamily,
    pub box_mat: BoxMatrix,
    pub plucker: PluckerRelation,
    /// Plucker position p (1-based, 1..=2m+2) to box row label.
    pub row_order: Vec<RowLabel>,
    /// Square, fundamental, then chains in enumeration order.
    pub terms: Vec<BoxTerm>,
    /// Exchanges killed by coinciding rows.
    pub vanishing: Vec<BoxTerm>,
}

pub fn box_relation(
    lambda: &Partition,
    ell: usize,
    family: RelationFamily,
) -> Result<BoxRelation, NoSuchColumn> {
    let a = lambda.remove_column(ell)?;
    let b = lambda.add_column(ell);
    let m = lambda.len();
    let cc = lambda.to_corners();
    let n = cc.n();
    let k = (1..=n)
        .find(|&t| cc.pairs[t - 1].1 == ell as i64)
        .expect("ell is a column height of lambda");

    let box_family = match family {
        RelationFamily::Plain => BoxFamily::Plain,
        RelationFamily::Formal => BoxFamily::Formal,
        RelationFamily::Quantum => BoxFamily::Quantum {
            shift_a: 0,
            shift_b: 0,
        },
    };
    let bx = box_matrix(&a, &b, m, &box_family);

    // X = positions 1..=m+1 holding L,1'..m'; Y = m+2..=2m+2 holding R,1..m.
    let mut row_order = Vec::with_capacity(2 * m + 2);
    row_order.push(RowLabel::Left);
    for i in 1..=m {
        row_order.push(RowLabel::Primed(i as u32));
    }
    row_order.push(RowLabel::Right);
    for i in 1..=m {
        row_order.push(RowLabel::Row(i as u32));
    }
    let mut swap = alloc::vec![1usize];
    swap.extend(ell + 2..=m + 1);
    let rel = generate(m + 1, &swap);

    let pos_of = |l: RowLabel| -> usize {
        row_order.iter().position(|&r| r == l).expect("known label") + 1
    };

    // Exchange subsets are named by which Y rows enter the left bracket.
    // The square draws R and the rows below the changed column; a chain
    // reshapes that set interval by interval.
    let mut star: BTreeSet<RowLabel> = BTreeSet::new();
    star.insert(RowLabel::Right);
    for i in ell + 1..=m {
        star.insert(RowLabel::Row(i as u32));
    }
    let y_of = |t: usize| cc.pairs[t - 1].1;
    let chain_subset = |chain: &IntervalChain| -> Vec<usize> {
        let mut set = star.clone();
        for iv in &chain.intervals {
            let out = if iv.j == n {
                RowLabel::Right
            } else {
                RowLabel::Row(y_of(iv.j) as u32 + 1)
            };
            assert!(set.remove(&out), "chain trades away a drawn row");
            assert!(set.insert(RowLabel::Row(y_of(iv.i) as u32)));
        }
        let mut pos: Vec<usize> = set.iter().map(|&l| pos_of(l)).collect();
        pos.sort_unstable();
        pos
    };
    let star_pos: Vec<usize> = {
        let mut pos: Vec<usize> = star.iter().map(|&l| pos_of(l)).collect();
        pos.sort_unstable();
        pos
    };

    let mut term_by_subset: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (idx, t) in rel.rhs.iter().enumerate() {
        let mut s: Vec<usize> = t.left.iter().copied().filter(|&p| p > m + 1).collect();
        s.sort_unstable();
        term_by_subset.insert(s, idx);
    }

    let labels_of =
        |ps: &[usize]| -> Vec<RowLabel> { ps.iter().map(|&p| row_order[p - 1]).collect() };
    let mk = |t: &PluckerTerm, kind: BoxTermKind, sign: i32| -> BoxTerm {
        assert_eq!(t.sign, 1);
        let left_rows = labels_of(&t.left);
        let right_rows = labels_of(&t.right);
        let left_form = bx.read_minor(&left_rows);
        let right_form = bx.read_minor(&right_rows);
        BoxTerm {
            kind,
            left_rows,
            right_rows,
            left_form,
            right_form,
            identity_sign: sign,
        }
    };

    let mut terms = Vec::new();
    let mut used = alloc::vec![false; rel.rhs.len()];
    let sq_idx = term_by_subset[&star_pos];
    used[sq_idx] = true;
    let sq = mk(&rel.rhs[sq_idx], BoxTermKind::Square, 1);
    assert_eq!(sq.left_form.kappa().as_ref(), Some(lambda));
    assert_eq!(sq.right_form.kappa().as_ref(), Some(lambda));
    assert_eq!(sq.left_form.parity * sq.right_form.parity, 1);
    terms.push(sq);

    let fund = mk(&rel.lhs, BoxTermKind::Fundamental, 1);
    assert_eq!(fund.left_form.kappa().as_ref(), Some(&b));
    assert_eq!(fund.right_form.kappa().as_ref(), Some(&a));
    assert_eq!(fund.left_form.parity * fund.right_form.parity, 1);
    terms.push(fund);

    for chain in IntervalChain::enumerate(n, k) {
        let idx = term_by_subset[&chain_subset(&chain)];
        used[idx] = true;
        let sign = chain.sign();
        let t = mk(&rel.rhs[idx], BoxTermKind::Chain(chain.clone()), sign);
        assert_eq!(t.left_form.padded(), Some(cc.push(&chain)));
        assert_eq!(t.right_form.padded(), Some(cc.pull(&chain)));
        assert_eq!(t.left_form.parity * t.right_form.parity, -sign);
        terms.push(t);
    }

    let mut vanishing = Vec::new();
    for (idx, t) in rel.rhs.iter().enumerate() {
        if used[idx] {
            continue;
        }
        let t = mk(t, BoxTermKind::Vanishing, 0);
        assert!(t.left_form.duplicate || t.right_form.duplicate);
        vanishing.push(t);
    }

    if family == RelationFamily::Quantum {
        let l1 = lambda.first() as i64;
        for t in &terms {
            let (el, er) = match &t.kind {
                BoxTermKind::Square => (-1, 1),
                BoxTermKind::Fundamental => (0, 0),
                BoxTermKind::Chain(c) => {
                    let b1 = t.right_form.kappa_raw.first().copied().unwrap_or(l1);
                    if c.outer_j() == n {
                        (0, l1 - b1)
                    } else {
                        (-1, l1 - b1 + 1)
                    }
                }
                BoxTermKind::Vanishing => unreachable!(),
            };
            assert_eq!(t.left_form.shift, Some(el));
            if !t.right_form.kappa_raw.is_empty() {
                assert_eq!(t.right_form.shift, Some(er));
            }
        }
    }

    Ok(BoxRelation {
        lambda: lambda.clone(),
        ell,
        k,
        n,
        m,
        family,
        box_mat: bx,
        plucker: rel,
        row_order,
        terms,
        vanishing,
    })
}

impl BoxRelation {
    /// Plucker residual with brackets evaluated as minors of the box.
    /// Zero iff the relation holds in the requested mode.
    pub fn verify(&self, mode: Mode) -> Polynomial {
        self.plucker.residual(|ps| {
            let rows: Vec<RowLabel> = ps.iter().map(|&p| self.row_order[p - 1]).collect();
            self.box_mat.minor_det(&rows, mode)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn fixed_matrix(n: usize, salt: i64) -> Vec<Vec<BigInt>> {
        (0..2 * n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let v = (r as i64 + 1) * (c as i64 + 2) * salt + (r as i64 * 7 + c as i64 * 3) % 11 - 5;
                        BigInt::from(v % 13)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn three_term_relation() {
        let rel = generate(2, &[2]);
        assert_eq!(rel.lhs.left, vec![1, 2]);
        assert_eq!(rel.rhs.len(), 2);
        assert_eq!(rel.rhs[0].left, vec![1, 3]);
        assert_eq!(rel.rhs[0].right, vec![2, 4]);
        assert_eq!(rel.rhs[1].left, vec![1, 4]);
        assert_eq!(rel.rhs[1].right, vec![3, 2]);
        for salt in 1..5 {
            assert!(verify(&rel, &fixed_matrix(2, salt)).is_zero());
        }
    }

    #[test]
    fn seven_term_relation() {
        let rel = generate(4, &[1, 2]);
        let displayed: Vec<(Vec<usize>, Vec<usize>)> = rel
            .rhs
            .iter()
            .map(|t| (t.left.clone(), t.right.clone()))
            .collect();
        assert_eq!(
            displayed,
            vec![
                (vec![5, 6, 3, 4], vec![1, 2, 7, 8]),
                (vec![5, 7, 3, 4], vec![1, 6, 2, 8]),
                (vec![5, 8, 3, 4], vec![1, 6, 7, 2]),
                (vec![6, 7, 3, 4], vec![5, 1, 2, 8]),
                (vec![6, 8, 3, 4], vec![5, 1, 7, 2]),
                (vec![7, 8, 3, 4], vec![5, 6, 1, 2]),
            ]
        );
        assert!(rel.rhs.iter().all(|t| t.sign == 1));
        assert!(verify(&rel, &fixed_matrix(4, 3)).is_zero());
    }

    #[test]
    fn full_swap_is_transposition() {
        let rel = generate(3, &[1, 2, 3]);
        assert_eq!(rel.rhs.len(), 1);
        assert_eq!(rel.rhs[0].left, vec![4, 5, 6]);
        assert_eq!(rel.rhs[0].right, vec![1, 2, 3]);
        assert!(verify(&rel, &fixed_matrix(3, 2)).is_zero());
    }

    #[test]
    fn normalization_signs() {
        let t = PluckerTerm {
            left: vec![3, 1, 2],
            right: vec![5, 4],
            sign: 1,
        };
        let n = t.normalized();
        assert_eq!(n.left, vec![1, 2, 3]);
        assert_eq!(n.right, vec![4, 5]);
        // [3,1,2] is an even rearrangement, [5,4] an odd one.
        assert_eq!(n.sign, -1);
    }

    #[test]
    fn alternating_brackets() {
        let mat = fixed_matrix(2, 5);
        let a = numeric_minor(&mat, &[1, 3]);
        let b = numeric_minor(&mat, &[3, 1]);
        assert_eq!(a, -b);
    }

    #[test]
    fn random_matrices_all_swaps() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
        for n in 2..=4 {
            for k in 1..=n {
                let swap: Vec<usize> = (1..=k).collect();
                let rel = generate(n, &swap);
                for _ in 0..5 {
                    let mat: Vec<Vec<BigInt>> = (0..2 * n)
                        .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect())
                        .collect();
                    assert!(verify(&rel, &mat).is_zero(), "n={n} k={k}");
                }
            }
        }
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn shape_pairs(rel: &BoxRelation) -> Vec<(Partition, Partition)> {
        rel.terms
            .iter()
            .map(|t| (t.left_form.kappa().unwrap(), t.right_form.kappa().unwrap()))
            .collect()
    }

    #[test]
    fn box_relation_seven_terms() {
        let rel = box_relation(&p(&[3, 2, 1]), 2, RelationFamily::Plain).unwrap();
        assert_eq!((rel.k, rel.n, rel.m), (2, 3, 3));
        assert_eq!(
            shape_pairs(&rel),
            vec![
                (p(&[3, 2, 1]), p(&[3, 2, 1])),
                (p(&[4, 3, 1]), p(&[2, 1, 1])),
                (p(&[3, 2, 2]), p(&[3, 1, 1])),
                (p(&[3, 3, 3]), p(&[1, 1, 1])),
                (p(&[3, 2, 2, 2]), p(&[3])),
                (p(&[3, 3, 3, 2]), p(&[1])),
                (p(&[3, 3, 3, 3]), p(&[])),
            ]
        );
        let signs: Vec<i32> = rel.terms.iter().map(|t| t.identity_sign).collect();
        assert_eq!(signs, vec![1, 1, 1, 1, 1, 1, -1]);
        // distinct parts, so every exchange survives
        assert!(rel.vanishing.is_empty());
        assert!(rel.verify(Mode::Specialized).is_zero());
    }

    #[test]
    fn box_relation_quantum_shifts() {
        let rel = box_relation(&p(&[3, 2, 1]), 2, RelationFamily::Quantum).unwrap();
        let shifts: Vec<(Option<i64>, Option<i64>)> = rel
            .terms
            .iter()
            .map(|t| (t.left_form.shift, t.right_form.shift))
            .collect();
        assert_eq!(
            shifts,
            vec![
                (Some(-1), Some(1)),
                (Some(0), Some(0)),
                (Some(-1), Some(1)),
                (Some(-1), Some(3)),
                (Some(0), Some(0)),
                (Some(0), Some(2)),
                (Some(0), Some(3)),
            ]
        );
        // the last chain pulls lambda down to two padding zeros
        assert_eq!(rel.terms[6].right_form.kappa_raw, vec![0, 0]);
        assert!(rel.verify(Mode::Specialized).is_zero());
        assert!(rel.verify(Mode::Formal).is_zero());
    }

    #[test]
    fn rectangle_box_three_terms() {
        let rel = box_relation(&p(&[2, 2]), 2, RelationFamily::Plain).unwrap();
        assert_eq!(
            shape_pairs(&rel),
            vec![
                (p(&[2, 2]), p(&[2, 2])),
                (p(&[3, 3]), p(&[1, 1])),
                (p(&[2, 2, 2]), p(&[2])),
            ]
        );
        assert_eq!(rel.vanishing.len(), 1);
        assert!(rel.verify(Mode::Specialized).is_zero());

        let rel = box_relation(&p(&[3, 3, 3]), 3, RelationFamily::Quantum).unwrap();
        assert_eq!(rel.terms.len(), 3);
        assert_eq!(rel.vanishing.len(), 2);
        assert!(rel.verify(Mode::Specialized).is_zero());
    }

    #[test]
    fn smallest_box_relation() {
        let rel = box_relation(&p(&[1]), 1, RelationFamily::Quantum).unwrap();
        assert_eq!(rel.terms.len(), 3);
        assert!(rel.vanishing.is_empty());
        let fund = &rel.terms[1];
        assert_eq!(fund.left_form.kappa().unwrap(), p(&[2]));
        assert_eq!(fund.right_form.kappa_raw, vec![0]);
        assert_eq!(fund.right_form.shift, Some(0));
        let chain = &rel.terms[2];
        assert_eq!(chain.left_form.kappa().unwrap(), p(&[1, 1]));
        assert!(chain.right_form.kappa_raw.is_empty());
        assert_eq!(chain.right_form.shift, None);
        assert!(rel.verify(Mode::Specialized).is_zero());
        assert!(rel.verify(Mode::Formal).is_zero());
    }

    #[test]
    fn missing_column_height() {
        let err = box_relation(&p(&[2, 2]), 1, RelationFamily::Plain).unwrap_err();
        assert_eq!(err, NoSuchColumn(1));
        assert!(box_relation(&p(&[3, 2, 1]), 4, RelationFamily::Plain).is_err());
    }

    #[test]
    fn box_relation_all_heights_verify() {
        for parts in [
            alloc::vec![2u32, 1],
            alloc::vec![3, 1],
            alloc::vec![2, 2],
            alloc::vec![2, 1, 1],
            alloc::vec![3, 2],
        ] {
            let lam = Partition::new(parts);
            let heights: Vec<usize> =
                lam.to_corners().pairs.iter().map(|&(_, y)| y as usize).collect();
            for &ell in &heights {
                for fam in [RelationFamily::Plain, RelationFamily::Quantum] {
                    let rel = box_relation(&lam, ell, fam).unwrap();
                    assert_eq!(
                        rel.terms.len() as u64,
                        2 + IntervalChain::count(rel.n, rel.k),
                        "{lam} ell={ell}"
                    );
                    // lhs aside, every exchange is matched or shown to vanish
                    assert_eq!(
                        rel.terms.len() - 1 + rel.vanishing.len(),
                        rel.plucker.rhs.len()
                    );
                    assert!(rel.verify(Mode::Specialized).is_zero(), "{lam} ell={ell}");
                }
            }
        }
    }
}
