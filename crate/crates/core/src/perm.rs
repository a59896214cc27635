//! Permutation values, notation parsing and printing, group arithmetic,
//! and the classical permutation statistics.
//!
//! Points are 1-based throughout and multiplication is read left to right:
//! `(a * b)(x) = b(a(x))`, so the left factor acts first.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A permutation of `{1..n}` stored as its sequence of images in one-line form.
///
/// `images[x-1]` is the image of the point `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line image table, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        if n == 0 {
            return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img < 1 || img > n {
                return Err(Error::PointOutOfRange {
                    point: img,
                    degree: n,
                });
            }
            if seen[img - 1] {
                return Err(Error::DuplicatePoint { point: img });
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity permutation on `{1..n}`.
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    /// Left-to-right product: `(self * rhs)(x) = rhs(self(x))`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        let images = self.images.iter().map(|&y| rhs.images[y - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Integer power, with negative exponents going through the inverse.
    pub fn pow(&self, e: i64) -> Permutation {
        let order = self.order() as i64;
        let mut k = e.rem_euclid(order) as u64;
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base).expect("equal degrees");
            k >>= 1;
        }
        acc
    }

    /// Cycle decomposition with fixed points omitted.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() >= 2 {
                cycles.push(cycle);
            }
        }
        CycleDecomposition::normalized(n, cycles)
    }

    /// Even iff the permutation is a product of an even number of transpositions.
    ///
    /// Computed from the cycle type: a cycle of length `m` contributes `m - 1`.
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Least `k >= 1` with `p^k = identity`, as the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .cycles()
            .iter()
            .fold(1usize, |acc, c| acc.lcm(&c.len()))
    }

    /// Positions `x < n` with `p(x) > p(x+1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&x| self.apply(x) > self.apply(x + 1))
            .collect()
    }

    /// Sum of the descent positions.
    pub fn major_index(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Number of inversions: pairs `x < y` with `p(x) > p(y)`.
    pub fn inversion_length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for x in 1..=n {
            for y in (x + 1)..=n {
                if self.apply(x) > self.apply(y) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Re-interprets the permutation at a larger degree, fixing the new top points.
    pub fn extend_to(&self, n: usize) -> Result<Permutation> {
        if n < self.degree() {
            return Err(Error::DegreeTooSmall {
                degree: n,
                min: self.degree(),
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=n);
        Ok(Permutation { images })
    }

    /// Renders the one-line notation, e.g. `[3;4;1;5;2]`.
    pub fn print_one_line(&self) -> String {
        let body: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        format!("[{}]", body.join(";"))
    }

    /// Renders the normalized cycle notation; the identity prints as `()`.
    pub fn print_cycles(&self) -> String {
        self.cycles().to_string()
    }

    /// Parses one-line notation, `[i1;i2;...;in]`. Whitespace between tokens is ignored.
    pub fn parse_one_line(text: &str) -> Result<Permutation> {
        let mut lex = Lexer::new(text);
        lex.expect('[')?;
        let mut images = vec![lex.uint()?];
        loop {
            match lex.peek() {
                Some(';') => {
                    lex.bump();
                    images.push(lex.uint()?);
                }
                Some(']') => {
                    lex.bump();
                    break;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected ';' or ']', found {}",
                        describe(other)
                    )))
                }
            }
        }
        lex.end()?;
        Permutation::from_images(images)
    }

    /// Parses cycle notation at an explicit degree, e.g. `(1,3)(2,4,5)` or `()`.
    ///
    /// Cycles must be disjoint; singleton cycles are accepted as fixed points.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
        if n == 0 {
            return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
        }
        let mut lex = Lexer::new(text);
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        let mut any = false;
        while lex.peek().is_some() {
            lex.expect('(')?;
            if !any && lex.peek() == Some(')') {
                // the identity, written "()"
                lex.bump();
                lex.end()?;
                return Ok(Permutation { images });
            }
            any = true;
            let mut cycle = vec![lex.uint()?];
            while lex.peek() == Some(',') {
                lex.bump();
                cycle.push(lex.uint()?);
            }
            lex.expect(')')?;
            for &pt in &cycle {
                if pt < 1 || pt > n {
                    return Err(Error::PointOutOfRange { point: pt, degree: n });
                }
                if seen[pt - 1] {
                    return Err(Error::DuplicatePoint { point: pt });
                }
                seen[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                images[pt - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        if !any {
            return Err(Error::Parse("empty cycle expression".into()));
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print_one_line())
    }
}

/// Disjoint cycles of a permutation, normalized for deterministic printing:
/// each cycle is rotated so its largest element comes first, and cycles are
/// sorted by largest element descending. Fixed points are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    fn normalized(degree: usize, cycles: Vec<Vec<usize>>) -> CycleDecomposition {
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| {
                let top = c
                    .iter()
                    .enumerate()
                    .max_by_key(|&(_, v)| v)
                    .map(|(i, _)| i)
                    .unwrap();
                let mut rotated = c[top..].to_vec();
                rotated.extend_from_slice(&c[..top]);
                rotated
            })
            .collect();
        cycles.sort_by(|a, b| b[0].cmp(&a[0]));
        CycleDecomposition { degree, cycles }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.degree).collect();
        for cycle in &self.cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                images[pt - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// Whitespace-skipping character lexer shared by the notation parsers.
pub(crate) struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Lexer<'a> {
    pub(crate) fn new(text: &'a str) -> Lexer<'a> {
        Lexer {
            chars: text.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    pub(crate) fn bump(&mut self) {
        self.skip_ws();
        self.chars.next();
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.bump();
                Ok(())
            }
            other => Err(Error::Parse(format!(
                "expected '{}', found {}",
                c,
                describe(other)
            ))),
        }
    }

    pub(crate) fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(Error::Parse(format!(
                "expected an integer, found {}",
                describe(self.chars.peek().copied())
            )));
        }
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("integer '{digits}' out of range")))
    }

    pub(crate) fn int(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let magnitude = self.uint()? as i64;
        Ok(if negative { -magnitude } else { magnitude })
    }

    pub(crate) fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::Parse(format!("unexpected trailing '{c}'"))),
        }
    }
}

pub(crate) fn describe(c: Option<char>) -> String {
    match c {
        Some(c) => format!("'{c}'"),
        None => "end of input".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn identity_images() {
        assert_eq!(Permutation::identity(3).images(), &[1, 2, 3]);
        assert_eq!(Permutation::identity(1).images(), &[1]);
    }

    #[test]
    fn from_images_rejects_bad_tables() {
        assert!(matches!(
            Permutation::from_images(vec![1, 1, 3]),
            Err(Error::DuplicatePoint { point: 1 })
        ));
        assert!(matches!(
            Permutation::from_images(vec![1, 4, 3]),
            Err(Error::PointOutOfRange { point: 4, .. })
        ));
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn compose_is_left_to_right() {
        // (a*b)(x) = b(a(x))
        let a = perm(&[2, 1, 3]);
        let b = perm(&[1, 3, 2]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(1), b.apply(a.apply(1)));
        assert_eq!(ab.images(), &[3, 1, 2]);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let p = perm(&[3, 4, 1, 5, 2]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let p = perm(&[3, 4, 1, 5, 2]);
        let mut acc = Permutation::identity(5);
        for e in 0..12 {
            assert_eq!(p.pow(e), acc);
            acc = acc.compose(&p).unwrap();
        }
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(-3), p.inverse().pow(3));
    }

    #[test]
    fn parity_and_order() {
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
        assert_eq!(Permutation::identity(7).order(), 1);
        let swap = perm(&[2, 1, 3]);
        assert_eq!(swap.parity(), Parity::Odd);
        assert_eq!(swap.order(), 2);
        // (1,2,3)(4,5) has order lcm(3,2)=6 and parity even+odd = odd
        let p = perm(&[2, 3, 1, 5, 4]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.parity(), Parity::Odd);
    }

    #[test]
    fn cycle_printing_convention() {
        let p = perm(&[3, 4, 1, 5, 2]);
        assert_eq!(p.print_cycles(), "(5,2,4)(3,1)");
        assert_eq!(Permutation::identity(4).print_cycles(), "()");
        // t_5 written with its largest point first
        let t5 = perm(&[5, 1, 2, 3, 4]);
        assert_eq!(t5.print_cycles(), "(5,4,3,2,1)");
    }

    #[test]
    fn one_line_round_trip() {
        let p = Permutation::parse_one_line("[3;4;1;5;2]").unwrap();
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.print_one_line(), "[3;4;1;5;2]");
        assert_eq!(
            Permutation::parse_one_line(" [ 3 ; 4 ; 1 ; 5 ; 2 ] ").unwrap(),
            p
        );
    }

    #[test]
    fn one_line_parse_errors() {
        assert!(Permutation::parse_one_line("3;4;1").is_err());
        assert!(Permutation::parse_one_line("[3;4;1;5;2] junk").is_err());
        assert!(matches!(
            Permutation::parse_one_line("[1;1;2]"),
            Err(Error::DuplicatePoint { .. })
        ));
        assert!(matches!(
            Permutation::parse_one_line("[1;5;2]"),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn cycles_parse() {
        let p = Permutation::parse_cycles("(1,3)(2,4,5)", 5).unwrap();
        assert_eq!(p.images(), &[3, 4, 1, 5, 2]);
        assert!(Permutation::parse_cycles("()", 4).unwrap().is_identity());
        // singleton cycles are fixed points
        let q = Permutation::parse_cycles("(2)(1,3)", 3).unwrap();
        assert_eq!(q.images(), &[3, 2, 1]);
    }

    #[test]
    fn cycles_parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1,2)(2,3)", 4),
            Err(Error::DuplicatePoint { point: 2 })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,6)", 5),
            Err(Error::PointOutOfRange { point: 6, .. })
        ));
        assert!(Permutation::parse_cycles("", 4).is_err());
        assert!(Permutation::parse_cycles("(1,2", 4).is_err());
    }

    #[test]
    fn cycles_round_trip_exhaustive_small() {
        use itertools::Itertools;
        for n in 1..=6 {
            for images in (1..=n).permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                let printed = p.print_cycles();
                assert_eq!(Permutation::parse_cycles(&printed, n).unwrap(), p);
                let one_line = p.print_one_line();
                assert_eq!(Permutation::parse_one_line(&one_line).unwrap(), p);
            }
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(Permutation::identity(5).major_index(), 0);
        assert_eq!(perm(&[3, 1, 2]).major_index(), 1);
        assert_eq!(perm(&[3, 2, 1]).major_index(), 3);
        assert_eq!(perm(&[3, 1, 2]).descent_set(), vec![1]);
        assert_eq!(perm(&[3, 2, 1]).descent_set(), vec![1, 2]);
        assert_eq!(perm(&[3, 1, 2]).inversion_length(), 2);
        assert_eq!(Permutation::identity(4).inversion_length(), 0);
    }

    #[test]
    fn extend_fixes_new_points() {
        let p = perm(&[2, 1]);
        let q = p.extend_to(4).unwrap();
        assert_eq!(q.images(), &[2, 1, 3, 4]);
        assert!(p.extend_to(1).is_err());
    }
}
