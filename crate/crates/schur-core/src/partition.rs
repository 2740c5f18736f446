//! Integer partitions, zero-padded partition sequences, corner coordinates,
//! and the nested interval chains that index border-strip push/pull moves.

use alloc::string::String;
use alloc::vec::Vec;

/// Weakly decreasing positive parts; trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes: sorts descending, drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Box count.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Zero-based part access; out of range reads as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Adds 1 to the first `l` parts (always yields a partition for l >= len).
    pub fn add_omega(&self, l: usize) -> Partition {
        assert!(l >= 1);
        let mut parts = self.parts.clone();
        while parts.len() < l {
            parts.push(0);
        }
        for p in parts.iter_mut().take(l) {
            *p += 1;
        }
        Partition::new(parts)
    }

    /// Subtracts 1 from the first `l` parts; None unless column `l` exists
    /// with a corner there (lambda_l > lambda_{l+1}).
    pub fn sub_omega(&self, l: usize) -> Option<Partition> {
        if l < 1 || l > self.len() || self.part(l - 1) <= self.part(l) {
            return None;
        }
        let mut parts = self.parts.clone();
        for p in parts.iter_mut().take(l) {
            *p -= 1;
        }
        Some(Partition::new(parts))
    }

    pub fn corners(&self) -> CornerCoords {
        CornerCoords::from_partition(self)
    }

    pub fn to_corners(&self) -> CornerCoords {
        self.corners()
    }

    /// Column-language alias for `add_omega`.
    pub fn add_column(&self, ell: usize) -> Partition {
        self.add_omega(ell)
    }

    pub fn remove_column(&self, ell: usize) -> Result<Partition, NoSuchColumn> {
        self.sub_omega(ell).ok_or(NoSuchColumn(ell))
    }

    /// Add the border strip running from outside corner `i` to inside
    /// corner `j`.
    pub fn push(&self, i: usize, j: usize) -> PaddedPartition {
        let chain = IntervalChain { k: i, intervals: vec![Interval { i, j }] };
        self.corners().push(&chain)
    }

    /// Remove the border strip running from outside corner `i` to inside
    /// corner `j`.
    pub fn pull(&self, i: usize, j: usize) -> PaddedPartition {
        let chain = IntervalChain { k: i, intervals: vec![Interval { i, j }] };
        self.corners().pull(&chain)
    }

    /// Number of distinct part values (outer corners of the diagram).
    pub fn corner_count(&self) -> usize {
        self.corners().n()
    }

    /// True when all column heights differ, i.e. every value 1..=lambda_1
    /// occurs among the parts.
    pub fn distinct_column_heights(&self) -> bool {
        let conj = self.conjugate();
        conj.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Accepts comma-separated weakly decreasing parts; "" and "0" mean empty.
    pub fn parse(s: &str) -> Result<Partition, ParseError> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let v: u32 = piece
                .trim()
                .parse()
                .map_err(|_| ParseError(format!("bad part {piece:?}")))?;
            parts.push(v);
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(ParseError(format!("parts not weakly decreasing in {t:?}")));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// All partitions of exactly `n` boxes, parts descending, deterministic order.
    pub fn of_size(n: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u64, max_part: u64, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: stack.clone(),
                });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                stack.push(p as u32);
                rec(remaining - p, p, stack, out);
                stack.pop();
            }
        }
        rec(n, n, &mut stack, &mut out);
        out
    }

    /// All partitions with at most `max_boxes` boxes, smallest sizes first.
    pub fn all_up_to(max_boxes: u64) -> Vec<Partition> {
        (0..=max_boxes).flat_map(Partition::of_size).collect()
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Removing a column of the given height was requested but the diagram
/// has no such column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoSuchColumn(pub usize);

impl core::fmt::Display for NoSuchColumn {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "no column of height {}", self.0)
    }
}

/// A partition together with a count of explicit trailing zero parts.
/// The zeros matter under spectral shifts, so they are tracked, not dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaddedPartition {
    pub shape: Partition,
    pub zeros: usize,
}

impl PaddedPartition {
    pub fn new(shape: Partition, zeros: usize) -> Self {
        PaddedPartition { shape, zeros }
    }

    /// Splits a weakly decreasing sequence into shape and trailing zeros.
    pub fn from_raw(raw: &[u32]) -> Self {
        for w in raw.windows(2) {
            assert!(w[0] >= w[1], "raw sequence not weakly decreasing");
        }
        let zeros = raw.iter().rev().take_while(|&&p| p == 0).count();
        PaddedPartition {
            shape: Partition {
                parts: raw[..raw.len() - zeros].to_vec(),
            },
            zeros,
        }
    }

    /// Pads `shape` with zeros out to total length `m`.
    pub fn pad_to(shape: Partition, m: usize) -> Self {
        assert!(m >= shape.len());
        let zeros = m - shape.len();
        PaddedPartition { shape, zeros }
    }

    pub fn raw_len(&self) -> usize {
        self.shape.len() + self.zeros
    }

    pub fn raw_parts(&self) -> Vec<u32> {
        let mut v = self.shape.parts.clone();
        v.resize(self.raw_len(), 0);
        v
    }

    /// First entry of the raw sequence, None when the sequence is empty.
    pub fn raw_first(&self) -> Option<u32> {
        if self.raw_len() == 0 {
            None
        } else {
            Some(self.shape.first())
        }
    }
}

/// Corner coordinates (x_1 > ... > x_n > 0, 0 < y_1 < ... < y_n):
/// the partition is (x_1^{y_1}, x_2^{y_2-y_1}, ..., x_n^{y_n-y_{n-1}}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerCoords {
    pub pairs: Vec<(i64, i64)>,
}

impl CornerCoords {
    pub fn from_partition(p: &Partition) -> Self {
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        let mut count = 0i64;
        for &part in p.parts() {
            count += 1;
            match pairs.last_mut() {
                Some(last) if last.0 == part as i64 => last.1 = count,
                _ => pairs.push((part as i64, count)),
            }
        }
        CornerCoords { pairs }
    }

    /// Corner count.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    /// Reads the raw part sequence back off the coordinates.
    /// X coordinates must stay weakly decreasing across positive-multiplicity
    /// entries and multiplicities must be nonnegative.
    pub fn read(&self) -> PaddedPartition {
        let mut raw: Vec<u32> = Vec::new();
        let mut prev_y = 0i64;
        for &(x, y) in &self.pairs {
            let mult = y - prev_y;
            assert!(mult >= 0, "negative multiplicity in corner read");
            if mult > 0 {
                assert!(x >= 0, "negative part in corner read");
                for _ in 0..mult {
                    raw.push(x as u32);
                }
            }
            prev_y = prev_y.max(y);
        }
        PaddedPartition::from_raw(&raw)
    }

    /// Push move: +1 on x_{i+1..j} and y_{i..j} for each interval, aggregated.
    pub fn push(&self, chain: &IntervalChain) -> PaddedPartition {
        self.apply(chain, 1)
    }

    /// Pull move: -1 on the same coordinates.
    pub fn pull(&self, chain: &IntervalChain) -> PaddedPartition {
        self.apply(chain, -1)
    }

    fn apply(&self, chain: &IntervalChain, delta: i64) -> PaddedPartition {
        let mut pairs = self.pairs.clone();
        for iv in &chain.intervals {
            assert!(1 <= iv.i && iv.i <= iv.j && iv.j <= pairs.len());
            for t in iv.i + 1..=iv.j {
                pairs[t - 1].0 += delta;
            }
            for t in iv.i..=iv.j {
                pairs[t - 1].1 += delta;
            }
        }
        CornerCoords { pairs }.read()
    }
}

/// Closed interval [i, j] of corner indices, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub i: usize,
    pub j: usize,
}

/// Strictly nested intervals i_1 < ... < i_r <= k <= j_r < ... < j_1,
/// outermost first, all pinned at corner k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalChain {
    pub k: usize,
    pub intervals: Vec<Interval>,
}

impl IntervalChain {
    pub fn r(&self) -> usize {
        self.intervals.len()
    }

    /// (-1)^(r-1).
    pub fn sign(&self) -> i32 {
        if self.r() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// Outermost right endpoint j_1.
    pub fn outer_j(&self) -> usize {
        self.intervals[0].j
    }

    /// Every chain at corner k of an n-corner shape. Order: r ascending,
    /// then j_1 ascending, i_1 descending, j_2 ascending, i_2 descending, ...
    pub fn enumerate(n: usize, k: usize) -> Vec<IntervalChain> {
        assert!(1 <= k && k <= n);
        let left: Vec<usize> = (1..=k).collect();
        let right: Vec<usize> = (k..=n).collect();
        let mut chains = Vec::new();
        let rmax = left.len().min(right.len());
        for r in 1..=rmax {
            for is in crate::util::combinations(&left, r) {
                for js in crate::util::combinations(&right, r) {
                    // is ascending pairs with js descending: s-th interval is
                    // [is[s], js[r-1-s]].
                    let intervals: Vec<Interval> = (0..r)
                        .map(|s| Interval {
                            i: is[s],
                            j: js[r - 1 - s],
                        })
                        .collect();
                    chains.push(IntervalChain { k, intervals });
                }
            }
        }
        chains.sort_by_key(|c| {
            let mut key: Vec<(usize, i64)> = vec![(c.r(), 0)];
            for iv in &c.intervals {
                key.push((iv.j, -(iv.i as i64)));
            }
            key
        });
        chains
    }

    /// C(k, r) * C(n-k+1, r) chains of length r exist; total over all r.
    pub fn count(n: usize, k: usize) -> u64 {
        let rmax = k.min(n - k + 1);
        (1..=rmax)
            .map(|r| crate::util::binomial(k as u64, r as u64) * crate::util::binomial((n - k + 1) as u64, r as u64))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(p("3,2,1").parts(), &[3, 2, 1]);
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("4,4,2,0,0").parts(), &[4, 4, 2]);
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("2,x").is_err());
        assert_eq!(Partition::new(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn basic_accessors() {
        let lam = p("4,2,2,1");
        assert_eq!(lam.size(), 9);
        assert_eq!(lam.part(1), 2);
        assert_eq!(lam.part(9), 0);
        assert_eq!(lam.conjugate().parts(), &[4, 3, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert!(lam.contains(&p("2,2,1")));
        assert!(!lam.contains(&p("5")));
        assert!(!lam.contains(&p("1,1,1,1,1")));
    }

    #[test]
    fn omega_moves() {
        assert_eq!(p("3,2,1").add_omega(2), p("4,3,1"));
        assert_eq!(p("3,2,1").sub_omega(2), Some(p("2,1,1")));
        assert_eq!(p("3,2,1").add_omega(5), p("4,3,2,1,1"));
        assert_eq!(p("2,2").sub_omega(1), None);
        assert_eq!(p("2,2").sub_omega(2), Some(p("1,1")));
        assert_eq!(p("1").sub_omega(2), None);
    }

    #[test]
    fn corner_roundtrip() {
        for s in ["", "1", "3,2,1", "4,4,2,1,1", "5,5,5"] {
            let lam = p(s);
            let coords = lam.corners();
            let back = coords.read();
            assert_eq!(back.shape, lam);
            assert_eq!(back.zeros, 0);
        }
        assert_eq!(p("3,3,2").corners().pairs, vec![(3, 2), (2, 3)]);
    }

    #[test]
    fn column_heights() {
        assert!(p("2,1").distinct_column_heights());
        assert!(p("3,2,1").distinct_column_heights());
        assert!(p("1,1,1").distinct_column_heights());
        assert!(p("").distinct_column_heights());
        assert!(!p("2,2").distinct_column_heights());
        assert!(!p("3,1").distinct_column_heights());
    }

    #[test]
    fn chain_enumeration_order() {
        let chains = IntervalChain::enumerate(3, 2);
        let flat: Vec<Vec<(usize, usize)>> = chains
            .iter()
            .map(|c| c.intervals.iter().map(|iv| (iv.i, iv.j)).collect())
            .collect();
        assert_eq!(
            flat,
            vec![
                vec![(2, 2)],
                vec![(1, 2)],
                vec![(2, 3)],
                vec![(1, 3)],
                vec![(1, 3), (2, 2)],
            ]
        );
        assert_eq!(chains.len() as u64, IntervalChain::count(3, 2));
    }

    #[test]
    fn chain_counts() {
        assert_eq!(IntervalChain::count(1, 1), 1);
        assert_eq!(IntervalChain::count(3, 2), 5);
        // n=4, k=2: r=1: 2*3=6, r=2: 1*3=3.
        assert_eq!(IntervalChain::count(4, 2), 9);
        for n in 1..=5 {
            for k in 1..=n {
                assert_eq!(IntervalChain::enumerate(n, k).len() as u64, IntervalChain::count(n, k));
            }
        }
    }

    #[test]
    fn push_pull_moves() {
        let c = p("3,2,1").corners();
        let one = |i, j| IntervalChain {
            k: 2,
            intervals: vec![Interval { i, j }],
        };
        assert_eq!(c.push(&one(2, 2)).raw_parts(), &[3, 2, 2]);
        assert_eq!(c.pull(&one(2, 2)).raw_parts(), &[3, 1, 1]);
        assert_eq!(c.push(&one(1, 2)).raw_parts(), &[3, 3, 3]);
        assert_eq!(c.pull(&one(1, 2)).raw_parts(), &[1, 1, 1]);
        assert_eq!(c.push(&one(2, 3)).raw_parts(), &[3, 2, 2, 2]);
        assert_eq!(c.pull(&one(2, 3)).raw_parts(), &[3, 0]);
        assert_eq!(c.push(&one(1, 3)).raw_parts(), &[3, 3, 3, 2]);
        assert_eq!(c.pull(&one(1, 3)).raw_parts(), &[1, 0]);
        let double = IntervalChain {
            k: 2,
            intervals: vec![Interval { i: 1, j: 3 }, Interval { i: 2, j: 2 }],
        };
        assert_eq!(c.push(&double).raw_parts(), &[3, 3, 3, 3]);
        assert_eq!(c.pull(&double).raw_parts(), &[0, 0]);
        assert_eq!(c.pull(&double).shape, Partition::empty());
        assert_eq!(c.pull(&double).zeros, 2);
        assert_eq!(double.sign(), -1);
    }

    #[test]
    fn padded_reads() {
        let pp = PaddedPartition::from_raw(&[3, 0, 0]);
        assert_eq!(pp.shape, p("3"));
        assert_eq!(pp.zeros, 2);
        assert_eq!(pp.raw_first(), Some(3));
        assert_eq!(PaddedPartition::from_raw(&[]).raw_first(), None);
        assert_eq!(PaddedPartition::pad_to(p("2,1"), 4).raw_parts(), &[2, 1, 0, 0]);
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(Partition::of_size(0), vec![Partition::empty()]);
        assert_eq!(Partition::of_size(4).len(), 5);
        assert_eq!(Partition::of_size(6).len(), 11);
        // 1+1+2+3+5+7+11 partitions of size <= 6.
        assert_eq!(Partition::all_up_to(6).len(), 30);
    }
}
