//! Exact multivariate polynomials over BigInt in two families of generators:
//! plain h_k and spectral t_k(u+c). The monomial order is graded lex, which
//! is compatible with multiplication; exact division eliminates leading
//! terms under it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Generator of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// h_k, the degree-k complete homogeneous generator.
    H { degree: i64 },
    /// t_k(u + shift), the same generator carrying a spectral offset.
    T { degree: i64, shift: i64 },
}

impl Symbol {
    pub fn h(degree: i64) -> Symbol {
        Symbol::H { degree }
    }

    pub fn t(degree: i64, shift: i64) -> Symbol {
        Symbol::T { degree, shift }
    }
}

impl core::fmt::Display for Symbol {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Symbol::H { degree } => write!(f, "h{degree}"),
            Symbol::T { degree, shift } => {
                if shift == 0 {
                    write!(f, "t{degree}(u)")
                } else if shift > 0 {
                    write!(f, "t{degree}(u+{shift})")
                } else {
                    write!(f, "t{degree}(u{shift})")
                }
            }
        }
    }
}

/// Product of generators with positive exponents, factors sorted by symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn symbol(s: Symbol) -> Monomial {
        Monomial {
            factors: vec![(s, 1)],
        }
    }

    /// Builds from arbitrary factors: sorts, merges, drops zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (Symbol, u32)>) -> Monomial {
        let mut map: BTreeMap<Symbol, u32> = BTreeMap::new();
        for (s, e) in factors {
            if e > 0 {
                *map.entry(s).or_insert(0) += e;
            }
        }
        Monomial {
            factors: map.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree: sum of exponents.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(sa, ea)), Some(&&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => {
                        factors.push((sa, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((sb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((sa, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&f), None) => {
                    factors.push(f);
                    a.next();
                }
                (None, Some(&&f)) => {
                    factors.push(f);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }

    /// Exponentwise quotient; None when any exponent would go negative.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut a = self.factors.iter().peekable();
        for &(sb, eb) in &other.factors {
            loop {
                let &&(sa, ea) = a.peek()?;
                if sa < sb {
                    factors.push((sa, ea));
                    a.next();
                } else if sa == sb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        factors.push((sa, ea - eb));
                    }
                    a.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        factors.extend(a.copied());
        Some(Monomial { factors })
    }
}

impl Ord for Monomial {
    /// Graded lex: total degree first, then the first symbol (ascending) whose
    /// exponents differ decides, larger exponent winning.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(sa, ea)), Some(&&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Display for Monomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        // highest subscript first, matching how determinant terms are read
        let mut first = true;
        for &(s, e) in self.factors.iter().rev() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{s}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Whether a polynomial keeps or collapses the boundary generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All symbols kept as free generators.
    Formal,
    /// Degree 0 generators become 1, negative degrees become 0.
    Specialized,
}

enum Subst {
    Zero,
    One,
    Replace(Symbol),
}

/// Finitely supported BigInt combination of monomials; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Polynomial {
        Polynomial::int(1)
    }

    pub fn int(c: i64) -> Polynomial {
        Polynomial::from_term(Monomial::one(), BigInt::from(c))
    }

    pub fn symbol(s: Symbol) -> Polynomial {
        Polynomial::from_term(Monomial::symbol(s), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial under the graded lex order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    fn substitute<F: Fn(Symbol) -> Subst>(&self, f: F) -> Polynomial {
        let mut out = Polynomial::zero();
        'term: for (m, c) in &self.terms {
            let mut factors: Vec<(Symbol, u32)> = Vec::new();
            for &(s, e) in m.factors() {
                match f(s) {
                    Subst::Zero => continue 'term,
                    Subst::One => {}
                    Subst::Replace(s2) => factors.push((s2, e)),
                }
            }
            out.add_term(Monomial::from_factors(factors), c.clone());
        }
        out
    }

    /// In `Specialized` mode applies h_0 -> 1, h_k -> 0 for k < 0, and the
    /// same rule to t_k regardless of spectral offset.
    pub fn specialize(&self, mode: Mode) -> Polynomial {
        match mode {
            Mode::Formal => self.clone(),
            Mode::Specialized => self.substitute(|s| {
                let degree = match s {
                    Symbol::H { degree } => degree,
                    Symbol::T { degree, .. } => degree,
                };
                match degree.cmp(&0) {
                    Ordering::Less => Subst::Zero,
                    Ordering::Equal => Subst::One,
                    Ordering::Greater => Subst::Replace(s),
                }
            }),
        }
    }

    /// Forgets spectral offsets: t_k(u+c) -> h_k.
    pub fn forget_shift(&self) -> Polynomial {
        self.substitute(|s| match s {
            Symbol::T { degree, .. } => Subst::Replace(Symbol::h(degree)),
            h => Subst::Replace(h),
        })
    }

    /// Translates every spectral offset: t_k(u+c) -> t_k(u+c+delta).
    pub fn shift_u(&self, delta: i64) -> Polynomial {
        self.substitute(|s| match s {
            Symbol::T { degree, shift } => Subst::Replace(Symbol::t(degree, shift + delta)),
            h => Subst::Replace(h),
        })
    }

    pub fn eval<F: Fn(Symbol) -> BigInt>(&self, f: F) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(s, e) in m.factors() {
                let base = f(s);
                for _ in 0..e {
                    v *= &base;
                }
            }
            acc += v;
        }
        acc
    }

    /// Exact quotient in the BigInt polynomial ring, None when `d` does not
    /// divide. Leading-term elimination is complete here: an exact quotient
    /// forces every intermediate leading coefficient to divide.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading()?;
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some((rm, rc)) = r.leading() {
            let qm = rm.divide(dm)?;
            if !(rc % dc).is_zero() {
                return None;
            }
            let qc = rc / dc;
            let step = Polynomial::from_term(qm, qc);
            r = &r - &(&step * d);
            q = &q + &step;
        }
        Some(q)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl core::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
