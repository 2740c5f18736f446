//! Matrices of symbolic polynomials with named rows. Determinants are taken
//! of an explicitly listed row selection, in listed order, so transposing two
//! listed rows flips the sign.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use crate::poly::Polynomial;

/// Row name inside a box matrix: the two unit rows plus the numbered rows of
/// each determinant block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowLabel {
    Left,
    Right,
    Row(u32),
    Primed(u32),
}

impl core::fmt::Display for RowLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            RowLabel::Left => f.write_str("L"),
            RowLabel::Right => f.write_str("R"),
            RowLabel::Row(i) => write!(f, "{i}"),
            RowLabel::Primed(i) => write!(f, "{i}'"),
        }
    }
}

/// Rectangular matrix of polynomials, rows addressed by label.
#[derive(Clone, Debug)]
pub struct SymMatrix {
    labels: Vec<RowLabel>,
    rows: Vec<Vec<Polynomial>>,
    ncols: usize,
}

impl SymMatrix {
    pub fn new(ncols: usize) -> SymMatrix {
        SymMatrix {
            labels: Vec::new(),
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn push_row(&mut self, label: RowLabel, row: Vec<Polynomial>) {
        assert_eq!(row.len(), self.ncols);
        assert!(!self.labels.contains(&label), "duplicate row label");
        self.labels.push(label);
        self.rows.push(row);
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn row(&self, label: RowLabel) -> &[Polynomial] {
        let i = self
            .labels
            .iter()
            .position(|&l| l == label)
            .expect("no such row");
        &self.rows[i]
    }

    pub fn entry(&self, label: RowLabel, col: usize) -> &Polynomial {
        &self.row(label)[col]
    }

    /// Determinant of the square submatrix formed by the listed rows, in
    /// listed order, against all columns.
    pub fn determinant(&self, selection: &[RowLabel]) -> Polynomial {
        assert_eq!(selection.len(), self.ncols, "minor must be square");
        let rows: Vec<&[Polynomial]> = selection.iter().map(|&l| self.row(l)).collect();
        determinant_of(&rows)
    }
}

/// Column-expansion determinant, memoized on the set of unused rows.
/// Zero entries are skipped before recursing.
pub fn determinant_of(rows: &[&[Polynomial]]) -> Polynomial {
    let n = rows.len();
    assert!(n <= 64);
    for r in rows {
        assert_eq!(r.len(), n);
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: BTreeMap<u64, Polynomial> = BTreeMap::new();
    det_rec(rows, full, n, &mut memo)
}

fn det_rec(rows: &[&[Polynomial]], mask: u64, n: usize, memo: &mut BTreeMap<u64, Polynomial>) -> Polynomial {
    if mask == 0 {
        return Polynomial::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let col = n - mask.count_ones() as usize;
    let mut acc = Polynomial::zero();
    let mut pos = 0u32;
    for r in 0..n {
        if mask & (1 << r) == 0 {
            continue;
        }
        let e = &rows[r][col];
        if !e.is_zero() {
            let sub = det_rec(rows, mask & !(1 << r), n, memo);
            let signed = if pos % 2 == 0 { e.clone() } else { -e };
            acc = &acc + &(&signed * &sub);
        }
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Polynomial, Symbol};
    use alloc::vec::Vec;

    fn h(k: i64) -> Polynomial {
        Polynomial::symbol(Symbol::h(k))
    }

    fn brute_det(rows: &[&[Polynomial]]) -> Polynomial {
        fn perms(n: usize) -> Vec<(Vec<usize>, i32)> {
            if n == 0 {
                return vec![(Vec::new(), 1)];
            }
            let mut out = Vec::new();
            for (p, s) in perms(n - 1) {
                for slot in 0..n {
                    let mut q = p.clone();
                    q.insert(slot, n - 1);
                    let swaps = (n - 1) - slot;
                    let sg = if swaps % 2 == 0 { s } else { -s };
                    out.push((q, sg));
                }
            }
            out
        }
        let n = rows.len();
        let mut acc = Polynomial::zero();
        for (p, s) in perms(n) {
            let mut prod = Polynomial::int(s as i64);
            for (r, &c) in p.iter().enumerate() {
                prod = &prod * &rows[r][c];
            }
            acc = &acc + &prod;
        }
        acc
    }

    #[test]
    fn two_by_two() {
        let mut m = SymMatrix::new(2);
        m.push_row(RowLabel::Row(1), vec![h(1), h(2)]);
        m.push_row(RowLabel::Row(2), vec![h(3), h(4)]);
        let d12 = m.determinant(&[RowLabel::Row(1), RowLabel::Row(2)]);
        let d21 = m.determinant(&[RowLabel::Row(2), RowLabel::Row(1)]);
        assert_eq!(d12, &(&h(1) * &h(4)) - &(&h(2) * &h(3)));
        assert_eq!(d21, -&d12);
    }

    #[test]
    fn repeated_row_vanishes() {
        let mut m = SymMatrix::new(2);
        m.push_row(RowLabel::Row(1), vec![h(1), h(2)]);
        m.push_row(RowLabel::Primed(1), vec![h(1), h(2)]);
        assert!(m.determinant(&[RowLabel::Row(1), RowLabel::Primed(1)]).is_zero());
    }

    #[test]
    fn unit_rows_select_minors() {
        // A leading unit row reduces to the complementary minor.
        let mut m = SymMatrix::new(3);
        m.push_row(RowLabel::Left, vec![Polynomial::one(), Polynomial::zero(), Polynomial::zero()]);
        m.push_row(RowLabel::Row(1), vec![h(5), h(1), h(2)]);
        m.push_row(RowLabel::Row(2), vec![h(6), h(3), h(4)]);
        let d = m.determinant(&[RowLabel::Left, RowLabel::Row(1), RowLabel::Row(2)]);
        assert_eq!(d, &(&h(1) * &h(4)) - &(&h(2) * &h(3)));
    }

    #[test]
    fn matches_permanent_expansion() {
        let entries: Vec<Vec<Polynomial>> = (0..4)
            .map(|r| {
                (0..4)
                    .map(|c| {
                        if (r + c) % 5 == 3 {
                            Polynomial::zero()
                        } else {
                            &h((r + 2 * c) as i64 % 4) + &Polynomial::int((r * c) as i64 % 3)
                        }
                    })
                    .collect()
            })
            .collect();
        let rows: Vec<&[Polynomial]> = entries.iter().map(|r| r.as_slice()).collect();
        assert_eq!(determinant_of(&rows), brute_det(&rows));
    }

    #[test]
    fn empty_det_is_one() {
        assert_eq!(determinant_of(&[]), Polynomial::one());
    }

    #[test]
    fn label_display() {
        assert_eq!(format!("{}", RowLabel::Left), "L");
        assert_eq!(format!("{}", RowLabel::Primed(3)), "3'");
    }
}
