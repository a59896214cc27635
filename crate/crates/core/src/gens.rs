//! The named generators of the symmetric and alternating groups, and words
//! over them.
//!
//! Degenerate subscripts follow a fixed convention so that exchange-law
//! right-hand sides are total: `t_0`, `t_1`, `u_0`, `u_2`, `v_0`, and `v_2`
//! all denote the identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{describe, Lexer, Permutation};

/// The adjacent transposition `s_i = (i, i+1)`, for `1 <= i <= n-1`.
pub fn s(i: usize, n: usize) -> Result<Permutation> {
    if i < 1 || i + 1 > n {
        return Err(Error::GeneratorOutOfRange {
            symbol: 's',
            index: i,
            degree: n,
        });
    }
    let mut images: Vec<usize> = (1..=n).collect();
    images.swap(i - 1, i);
    Ok(Permutation::from_images(images).unwrap())
}

/// The cycle `t_m = (m, m-1, ..., 1)`, equal to `s_1 * s_2 * ... * s_{m-1}`.
///
/// One-line form `[m;1;...;m-1]`. `t_0` and `t_1` are the identity.
pub fn t(m: usize, n: usize) -> Result<Permutation> {
    if m > n {
        return Err(Error::GeneratorOutOfRange {
            symbol: 't',
            index: m,
            degree: n,
        });
    }
    let mut images: Vec<usize> = (1..=n).collect();
    if m >= 2 {
        images[0] = m;
        for x in 2..=m {
            images[x - 1] = x - 1;
        }
    }
    Ok(Permutation::from_images(images).unwrap())
}

/// The even generator `u_{2r} = t_{2r-2} * s_{2r-1}`.
///
/// Indices below 4 denote the identity; odd indices are rejected.
pub fn u(idx: usize, n: usize) -> Result<Permutation> {
    if !idx.is_multiple_of(2) || idx > n {
        return Err(Error::GeneratorOutOfRange {
            symbol: 'u',
            index: idx,
            degree: n,
        });
    }
    if idx < 4 {
        return Ok(Permutation::identity(n));
    }
    t(idx - 2, n)?.compose(&s(idx - 1, n)?)
}

/// The even generator `v_{2r} = t_{2r}^2`, the double cycle
/// `(2r, 2r-2, ..., 2)(2r-1, 2r-3, ..., 1)`.
///
/// Indices below 4 denote the identity; odd indices are rejected.
pub fn v(idx: usize, n: usize) -> Result<Permutation> {
    if !idx.is_multiple_of(2) || idx > n {
        return Err(Error::GeneratorOutOfRange {
            symbol: 'v',
            index: idx,
            degree: n,
        });
    }
    if idx < 4 {
        return Ok(Permutation::identity(n));
    }
    let tm = t(idx, n)?;
    tm.compose(&tm)
}

/// A generator symbol with its subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    S(usize),
    T(usize),
    U(usize),
    V(usize),
}

impl Gen {
    pub fn symbol(&self) -> char {
        match self {
            Gen::S(_) => 's',
            Gen::T(_) => 't',
            Gen::U(_) => 'u',
            Gen::V(_) => 'v',
        }
    }

    pub fn index(&self) -> usize {
        match *self {
            Gen::S(i) | Gen::T(i) | Gen::U(i) | Gen::V(i) => i,
        }
    }

    /// The permutation this symbol denotes at degree `n`.
    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        match *self {
            Gen::S(i) => s(i, n),
            Gen::T(m) => t(m, n),
            Gen::U(i) => u(i, n),
            Gen::V(i) => v(i, n),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.symbol(), self.index())
    }
}

/// A word over the generator alphabet: a sequence of `(symbol, exponent)`
/// pairs, evaluated as a left-to-right product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    degree: usize,
    letters: Vec<(Gen, i64)>,
}

impl GeneratorWord {
    /// Validates every symbol against the degree.
    pub fn new(degree: usize, letters: Vec<(Gen, i64)>) -> Result<GeneratorWord> {
        if degree == 0 {
            return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
        }
        for &(gen, _) in &letters {
            gen.to_permutation(degree)?;
        }
        Ok(GeneratorWord { degree, letters })
    }

    pub fn empty(degree: usize) -> GeneratorWord {
        GeneratorWord {
            degree,
            letters: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when every letter is a `t` symbol.
    pub fn is_t_word(&self) -> bool {
        self.letters.iter().all(|(g, _)| matches!(g, Gen::T(_)))
    }

    /// Left-to-right product of the letter permutations.
    pub fn evaluate(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for &(gen, e) in &self.letters {
            let p = gen.to_permutation(self.degree).expect("validated letter");
            acc = acc.compose(&p.pow(e)).expect("equal degrees");
        }
        acc
    }

    /// Concatenation of two words of equal degree.
    pub fn concat(&self, rhs: &GeneratorWord) -> Result<GeneratorWord> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: rhs.degree,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(GeneratorWord {
            degree: self.degree,
            letters,
        })
    }

    /// Parses the word grammar: `term ("*" term)*` with
    /// `term = ("s"|"t"|"u"|"v") int ("^" signed-int)?`, or `e` for the
    /// empty word. Whitespace between tokens is insignificant.
    pub fn parse(text: &str, degree: usize) -> Result<GeneratorWord> {
        let mut lex = Lexer::new(text);
        if lex.peek() == Some('e') {
            lex.bump();
            lex.end()?;
            return GeneratorWord::new(degree, Vec::new());
        }
        let mut letters = Vec::new();
        loop {
            let sym = match lex.peek() {
                Some(c @ ('s' | 't' | 'u' | 'v')) => {
                    lex.bump();
                    c
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected a generator symbol, found {}",
                        describe(other)
                    )))
                }
            };
            let index = lex.uint()?;
            let exponent = if lex.peek() == Some('^') {
                lex.bump();
                lex.int()?
            } else {
                1
            };
            let gen = match sym {
                's' => Gen::S(index),
                't' => Gen::T(index),
                'u' => Gen::U(index),
                _ => Gen::V(index),
            };
            letters.push((gen, exponent));
            match lex.peek() {
                Some('*') => lex.bump(),
                None => break,
                other => {
                    return Err(Error::Parse(format!(
                        "expected '*' or end of word, found {}",
                        describe(other)
                    )))
                }
            }
        }
        GeneratorWord::new(degree, letters)
    }

    /// Renders the word in the grammar accepted by [`GeneratorWord::parse`].
    pub fn print(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        let terms: Vec<String> = self
            .letters
            .iter()
            .map(|(g, e)| format!("{}{}^{}", g.symbol(), g.index(), e))
            .collect();
        terms.join(" * ")
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print())
    }
}

/// Convenience constructor used throughout the identity suites.
pub fn word(degree: usize, letters: &[(Gen, i64)]) -> GeneratorWord {
    GeneratorWord::new(degree, letters.to_vec()).expect("letters in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Parity;

    #[test]
    fn s_examples() {
        assert_eq!(s(1, 3).unwrap().images(), &[2, 1, 3]);
        assert_eq!(s(3, 4).unwrap().images(), &[1, 2, 4, 3]);
        assert!(s(0, 3).is_err());
        assert!(s(3, 3).is_err());
    }

    #[test]
    fn t_examples() {
        assert_eq!(t(4, 4).unwrap().images(), &[4, 1, 2, 3]);
        assert_eq!(t(2, 2).unwrap().images(), &[2, 1]);
        assert_eq!(t(5, 5).unwrap().print_cycles(), "(5,4,3,2,1)");
        assert!(t(1, 4).unwrap().is_identity());
        assert!(t(0, 4).unwrap().is_identity());
        assert!(t(5, 4).is_err());
    }

    #[test]
    fn t_is_product_of_adjacent_transpositions() {
        for n in 2..=8 {
            for m in 2..=n {
                let mut acc = Permutation::identity(n);
                for j in 1..m {
                    acc = acc.compose(&s(j, n).unwrap()).unwrap();
                }
                assert_eq!(acc, t(m, n).unwrap());
                let expected = if m % 2 == 1 { Parity::Even } else { Parity::Odd };
                assert_eq!(t(m, n).unwrap().parity(), expected);
            }
        }
    }

    #[test]
    fn u_examples() {
        assert_eq!(u(4, 4).unwrap().print_cycles(), "(4,3)(2,1)");
        assert_eq!(
            u(4, 4).unwrap(),
            Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap()
        );
        assert_eq!(
            u(6, 6).unwrap(),
            Permutation::parse_cycles("(4,3,2,1)(5,6)", 6).unwrap()
        );
        assert_eq!(
            s(1, 4).unwrap().compose(&s(3, 4).unwrap()).unwrap(),
            u(4, 4).unwrap()
        );
        assert!(u(2, 4).unwrap().is_identity());
        assert!(u(5, 6).is_err());
        assert!(u(6, 5).is_err());
    }

    #[test]
    fn v_examples() {
        assert_eq!(
            v(4, 4).unwrap(),
            Permutation::parse_cycles("(1,3)(2,4)", 4).unwrap()
        );
        assert_eq!(
            v(6, 6).unwrap(),
            Permutation::parse_cycles("(6,4,2)(5,3,1)", 6).unwrap()
        );
        assert!(v(2, 4).unwrap().is_identity());
        assert!(v(3, 6).is_err());
    }

    #[test]
    fn t_products_and_inverses() {
        let product = t(2, 3).unwrap().compose(&t(3, 3).unwrap()).unwrap();
        assert_eq!(product.images(), &[1, 3, 2]);
        let product = t(3, 4).unwrap().compose(&t(4, 4).unwrap()).unwrap();
        assert_eq!(product.images(), &[2, 4, 1, 3]);
        assert_eq!(t(4, 4).unwrap().inverse().images(), &[2, 3, 4, 1]);
    }

    #[test]
    fn generator_orders() {
        assert_eq!(u(6, 6).unwrap().order(), 4);
        assert_eq!(v(8, 8).unwrap().order(), 4);
        for n in (4..=16).step_by(2) {
            let r = n / 2;
            assert_eq!(u(n, n).unwrap().order(), if r == 2 { 2 } else { 2 * r - 2 });
            assert_eq!(v(n, n).unwrap().order(), r);
        }
    }

    #[test]
    fn u_squared_is_v_shifted_down() {
        for n in (6..=16).step_by(2) {
            let u2 = u(n, n).unwrap().compose(&u(n, n).unwrap()).unwrap();
            assert_eq!(u2, v(n - 2, n).unwrap());
        }
        let u4 = u(4, 8).unwrap();
        assert!(u4.compose(&u4).unwrap().is_identity());
        assert_eq!(u(4, 8).unwrap().inverse(), u(4, 8).unwrap());
    }

    #[test]
    fn evaluate_words() {
        assert!(GeneratorWord::empty(4).evaluate().is_identity());
        let w = word(4, &[(Gen::T(3), 1), (Gen::T(4), 1)]);
        assert_eq!(w.evaluate().images(), &[2, 4, 1, 3]);
        // negative exponents go through the inverse
        let w = word(5, &[(Gen::T(5), -2)]);
        assert_eq!(w.evaluate(), t(5, 5).unwrap().pow(3));
        // t_{2r}^2 = v_{2r}
        for n in (4..=12).step_by(2) {
            let w = word(n, &[(Gen::T(n), 2)]);
            assert_eq!(w.evaluate(), v(n, n).unwrap());
        }
    }

    #[test]
    fn word_validation() {
        assert!(GeneratorWord::new(4, vec![(Gen::S(4), 1)]).is_err());
        assert!(GeneratorWord::new(4, vec![(Gen::T(5), 1)]).is_err());
        assert!(GeneratorWord::new(4, vec![(Gen::U(3), 1)]).is_err());
        assert!(GeneratorWord::new(4, vec![(Gen::U(2), 7)]).is_ok());
    }

    #[test]
    fn word_parse_print_round_trip() {
        let w = GeneratorWord::parse("t3^1 * t4^2", 4).unwrap();
        assert_eq!(
            w.letters(),
            &[(Gen::T(3), 1), (Gen::T(4), 2)]
        );
        assert_eq!(w.print(), "t3^1 * t4^2");
        assert_eq!(GeneratorWord::parse("e", 5).unwrap(), GeneratorWord::empty(5));
        let w = GeneratorWord::parse(" u4 * v6 ^ -2 * s1 ", 6).unwrap();
        assert_eq!(
            w.letters(),
            &[(Gen::U(4), 1), (Gen::V(6), -2), (Gen::S(1), 1)]
        );
        let reparsed = GeneratorWord::parse(&w.print(), 6).unwrap();
        assert_eq!(reparsed, w);
    }

    #[test]
    fn word_parse_errors() {
        assert!(GeneratorWord::parse("x3", 4).is_err());
        assert!(GeneratorWord::parse("t3 t4", 4).is_err());
        assert!(GeneratorWord::parse("t", 4).is_err());
        assert!(GeneratorWord::parse("t9", 4).is_err());
        assert!(GeneratorWord::parse("", 4).is_err());
    }
}
