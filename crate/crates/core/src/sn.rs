//! The ordered canonical form of the symmetric group: every permutation is
//! a unique product `t_2^{i_2} * t_3^{i_3} * ... * t_n^{i_n}` with
//! `0 <= i_k < k`, together with the exchange law that reorders an
//! out-of-order pair of `t` powers and a rewriting normalizer built on it.

use std::fmt;

use crate::error::{Error, Result};
use crate::gens::{t, Gen, GeneratorWord};
use crate::perm::{describe, Lexer, Permutation};

/// The exponent vector `(i_2, ..., i_n)` of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SnCanonicalForm {
    degree: usize,
    exponents: Vec<usize>,
}

impl SnCanonicalForm {
    /// `exponents[k-2]` is the power of `t_k`; each must satisfy `i_k < k`.
    pub fn new(degree: usize, exponents: Vec<usize>) -> Result<SnCanonicalForm> {
        if degree == 0 {
            return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
        }
        let expected = degree.saturating_sub(1);
        if exponents.len() != expected {
            return Err(Error::Parse(format!(
                "expected {} exponents for degree {}, got {}",
                expected,
                degree,
                exponents.len()
            )));
        }
        for (slot, &e) in exponents.iter().enumerate() {
            let subscript = slot + 2;
            if e >= subscript {
                return Err(Error::ExponentOutOfBounds {
                    subscript,
                    exponent: e as i64,
                });
            }
        }
        Ok(SnCanonicalForm { degree, exponents })
    }

    pub fn identity(degree: usize) -> SnCanonicalForm {
        SnCanonicalForm {
            degree,
            exponents: vec![0; degree.saturating_sub(1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Exponents indexed by subscript minus two.
    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// The power of `t_k`.
    pub fn exponent_of(&self, k: usize) -> usize {
        self.exponents[k - 2]
    }

    /// Sum of the exponents; equals the major index of the decoded permutation.
    pub fn exponent_sum(&self) -> usize {
        self.exponents.iter().sum()
    }

    pub fn to_word(&self) -> GeneratorWord {
        let letters: Vec<(Gen, i64)> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(slot, &e)| (Gen::T(slot + 2), e as i64))
            .collect();
        GeneratorWord::new(self.degree, letters).expect("subscripts in range")
    }

    /// Renders `t2^a * t3^b * ...` omitting zero exponents; the identity
    /// renders as `e`.
    pub fn print(&self) -> String {
        self.to_word().print()
    }

    /// Parses the rendering grammar: `t` factors with strictly increasing
    /// subscripts and in-bounds exponents, or `e`.
    pub fn parse(text: &str, degree: usize) -> Result<SnCanonicalForm> {
        let mut lex = Lexer::new(text);
        let mut exponents = vec![0usize; degree.saturating_sub(1)];
        if lex.peek() == Some('e') {
            lex.bump();
            lex.end()?;
            return SnCanonicalForm::new(degree, exponents);
        }
        let mut prev_subscript = 0usize;
        loop {
            match lex.peek() {
                Some('t') => lex.bump(),
                other => {
                    return Err(Error::Parse(format!(
                        "expected 't', found {}",
                        describe(other)
                    )))
                }
            }
            let subscript = lex.uint()?;
            let exponent = if lex.peek() == Some('^') {
                lex.bump();
                lex.int()?
            } else {
                1
            };
            if subscript < 2 || subscript > degree {
                return Err(Error::GeneratorOutOfRange {
                    symbol: 't',
                    index: subscript,
                    degree,
                });
            }
            if subscript <= prev_subscript {
                return Err(Error::Parse(format!(
                    "subscripts must be strictly increasing at t{subscript}"
                )));
            }
            if exponent < 0 || exponent as usize >= subscript {
                return Err(Error::ExponentOutOfBounds {
                    subscript,
                    exponent,
                });
            }
            exponents[subscript - 2] = exponent as usize;
            prev_subscript = subscript;
            match lex.peek() {
                Some('*') => lex.bump(),
                None => break,
                other => {
                    return Err(Error::Parse(format!(
                        "expected '*' or end of form, found {}",
                        describe(other)
                    )))
                }
            }
        }
        SnCanonicalForm::new(degree, exponents)
    }
}

impl fmt::Display for SnCanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print())
    }
}

/// An ordered product of `t` powers with reduced exponents; the carrier for
/// exchange-law right-hand sides and the normalizer's working state.
///
/// Identity factors (subscript below 2 or exponent reducing to 0) are
/// dropped and adjacent equal subscripts are merged on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPowerProduct {
    degree: usize,
    factors: Vec<(usize, usize)>,
}

impl TPowerProduct {
    /// Reduces raw `(subscript, exponent)` pairs: exponents are taken mod the
    /// subscript (the order of `t_m` is `m`), degenerate factors are dropped,
    /// and adjacent equal subscripts merge.
    pub fn from_raw(degree: usize, raw: &[(i64, i64)]) -> TPowerProduct {
        let mut factors: Vec<(usize, usize)> = Vec::with_capacity(raw.len());
        for &(subscript, exponent) in raw {
            if subscript < 2 {
                continue;
            }
            let m = subscript as usize;
            let e = exponent.rem_euclid(subscript) as usize;
            push_reduced(&mut factors, m, e);
        }
        TPowerProduct { degree, factors }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn evaluate(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for &(m, e) in &self.factors {
            acc = acc
                .compose(&t(m, self.degree).expect("subscript in range").pow(e as i64))
                .expect("equal degrees");
        }
        acc
    }

    pub fn to_word(&self) -> GeneratorWord {
        let letters: Vec<(Gen, i64)> = self
            .factors
            .iter()
            .map(|&(m, e)| (Gen::T(m), e as i64))
            .collect();
        GeneratorWord::new(self.degree, letters).expect("subscripts in range")
    }
}

fn push_reduced(factors: &mut Vec<(usize, usize)>, m: usize, e: usize) {
    let e = e % m;
    if e == 0 {
        return;
    }
    if let Some(last) = factors.last_mut() {
        if last.0 == m {
            last.1 = (last.1 + e) % m;
            if last.1 == 0 {
                factors.pop();
            }
            return;
        }
    }
    factors.push((m, e));
}

/// Which of the three exchange cases applies to `(q, i_q, p, i_p)`.
///
/// The guard intervals overlap at their boundaries; the selected case is the
/// first one that applies, and the overlap suite certifies that the choice
/// does not matter.
pub(crate) fn exchange_case(q: usize, i_q: usize, p: usize, i_p: usize) -> u8 {
    if q - i_q >= p {
        1
    } else if i_p <= q - i_q {
        2
    } else {
        3
    }
}

/// The right-hand side of a single exchange case, before reduction.
pub(crate) fn exchange_rhs_raw(case: u8, q: i64, i_q: i64, p: i64, i_p: i64) -> Vec<(i64, i64)> {
    match case {
        1 => vec![(i_q + i_p, i_q), (p + i_q, i_p), (q, i_q)],
        2 => vec![(i_q, p + i_q - q), (i_q + i_p, q - p), (q, i_q + i_p)],
        3 => vec![
            (p + i_q - q, i_q + i_p - q),
            (i_q, p - i_p),
            (q, i_q + i_p - p),
        ],
        _ => unreachable!("cases are 1..=3"),
    }
}

pub(crate) fn exchange_sn_with_case(
    case: u8,
    q: usize,
    i_q: usize,
    p: usize,
    i_p: usize,
    n: usize,
) -> TPowerProduct {
    let raw = exchange_rhs_raw(case, q as i64, i_q as i64, p as i64, i_p as i64);
    TPowerProduct::from_raw(n, &raw)
}

/// Rewrites the out-of-order product `t_q^{i_q} * t_p^{i_p}` (with `p < q`)
/// into an ordered product of `t` powers evaluating to the same permutation.
pub fn exchange_sn(q: usize, i_q: usize, p: usize, i_p: usize, n: usize) -> Result<TPowerProduct> {
    if !(2 <= p && p < q && q <= n) {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 2 <= p < q <= n, got p={p}, q={q}, n={n}"
        )));
    }
    if !(1 <= i_q && i_q < q) || !(1 <= i_p && i_p < p) {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 1 <= i_q < q and 1 <= i_p < p, got i_q={i_q}, i_p={i_p}"
        )));
    }
    let case = exchange_case(q, i_q, p, i_p);
    Ok(exchange_sn_with_case(case, q, i_q, p, i_p, n))
}

/// Encodes a permutation into its canonical exponent vector by peeling the
/// top point: `t_m^i` sends `m` to `m - i`, and the lower factors fix `m`,
/// so `i_m = (m - g(m)) mod m` and the factor strips off on the right.
pub fn encode_sn(p: &Permutation) -> SnCanonicalForm {
    let n = p.degree();
    let mut exponents = vec![0usize; n.saturating_sub(1)];
    let mut g = p.clone();
    for m in (2..=n).rev() {
        let i_m = (m - g.apply(m)) % m;
        exponents[m - 2] = i_m;
        if i_m != 0 {
            g = g
                .compose(&t(m, n).expect("m <= n").pow(-(i_m as i64)))
                .expect("equal degrees");
        }
    }
    debug_assert!(g.is_identity());
    SnCanonicalForm { degree: n, exponents }
}

/// Evaluates the canonical form back to its permutation.
pub fn decode_sn(c: &SnCanonicalForm) -> Permutation {
    let n = c.degree();
    let mut acc = Permutation::identity(n);
    for (slot, &e) in c.exponents.iter().enumerate() {
        if e != 0 {
            let m = slot + 2;
            acc = acc
                .compose(&t(m, n).expect("m <= n").pow(e as i64))
                .expect("equal degrees");
        }
    }
    acc
}

/// Sum of the exponents of a canonical form.
pub fn maj_of_form(c: &SnCanonicalForm) -> usize {
    c.exponent_sum()
}

/// Result of a normalization run, carrying the rewrite count for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub form: SnCanonicalForm,
    pub rewrites: u64,
}

/// Normalizes a word of `t` powers into canonical form by repeatedly
/// rewriting the rightmost adjacent pair with strictly decreasing
/// subscripts via the exchange law.
///
/// The rewrite loop carries an iteration budget of `10 * len * n^2`; hitting
/// it signals an implementation bug, as does the final oracle comparison
/// against `encode_sn(evaluate(w))`.
pub fn normalize_sn(w: &GeneratorWord) -> Result<Normalized> {
    if !w.is_t_word() {
        return Err(Error::Parse(
            "normalization input must use only t symbols".to_string(),
        ));
    }
    let n = w.degree();
    let raw: Vec<(i64, i64)> = w
        .letters()
        .iter()
        .map(|&(g, e)| (g.index() as i64, e))
        .collect();
    let mut product = TPowerProduct::from_raw(n, &raw);

    let budget = 10 * (w.letters().len().max(1) as u64) * (n as u64) * (n as u64);
    let mut rewrites = 0u64;
    loop {
        let factors = &product.factors;
        let descent = (0..factors.len().saturating_sub(1))
            .rev()
            .find(|&j| factors[j].0 > factors[j + 1].0);
        let Some(j) = descent else { break };
        if rewrites >= budget {
            return Err(Error::RewriteBudgetExceeded {
                budget,
                word_len: w.letters().len(),
            });
        }
        rewrites += 1;
        let (q, i_q) = factors[j];
        let (p, i_p) = factors[j + 1];
        let replacement = exchange_sn(q, i_q, p, i_p, n)?;
        let mut merged: Vec<(i64, i64)> = Vec::with_capacity(factors.len() + 2);
        merged.extend(factors[..j].iter().map(|&(m, e)| (m as i64, e as i64)));
        merged.extend(
            replacement
                .factors
                .iter()
                .map(|&(m, e)| (m as i64, e as i64)),
        );
        merged.extend(factors[j + 2..].iter().map(|&(m, e)| (m as i64, e as i64)));
        product = TPowerProduct::from_raw(n, &merged);
    }

    let mut exponents = vec![0usize; n.saturating_sub(1)];
    for &(m, e) in &product.factors {
        exponents[m - 2] = e;
    }
    let form = SnCanonicalForm::new(n, exponents)?;

    let oracle = encode_sn(&w.evaluate());
    if form != oracle {
        return Err(Error::NormalizeMismatch(format!(
            "rewriting produced {} but encoding gives {}",
            form.print(),
            oracle.print()
        )));
    }
    Ok(Normalized { form, rewrites })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::word;
    use itertools::Itertools;

    #[test]
    fn form_bounds() {
        assert!(SnCanonicalForm::new(4, vec![0, 1, 1]).is_ok());
        assert!(matches!(
            SnCanonicalForm::new(4, vec![0, 3, 1]),
            Err(Error::ExponentOutOfBounds { subscript: 3, .. })
        ));
        assert!(SnCanonicalForm::new(4, vec![0, 1]).is_err());
        assert!(SnCanonicalForm::new(1, vec![]).is_ok());
    }

    #[test]
    fn decode_examples() {
        assert!(decode_sn(&SnCanonicalForm::identity(5)).is_identity());
        let c = SnCanonicalForm::new(4, vec![0, 0, 1]).unwrap();
        assert_eq!(decode_sn(&c).images(), &[4, 1, 2, 3]);
        let c = SnCanonicalForm::new(4, vec![0, 1, 1]).unwrap();
        assert_eq!(decode_sn(&c).images(), &[2, 4, 1, 3]);
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode_sn(&Permutation::identity(6)),
            SnCanonicalForm::identity(6)
        );
        let p = Permutation::from_images(vec![2, 4, 1, 3]).unwrap();
        assert_eq!(encode_sn(&p).exponents(), &[0, 1, 1]);
        let t5_squared = t(5, 5).unwrap().pow(2);
        assert_eq!(encode_sn(&t5_squared).exponents(), &[0, 0, 0, 2]);
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for n in 1..=6 {
            let mut count = 0usize;
            for images in (1..=n).permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                assert_eq!(decode_sn(&encode_sn(&p)), p);
                count += 1;
            }
            assert_eq!(count, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn exchange_case_one() {
        let result = exchange_sn(4, 1, 3, 1, 4).unwrap();
        assert_eq!(result.factors(), &[(2, 1), (4, 2)]);
        let lhs = word(4, &[(Gen::T(4), 1), (Gen::T(3), 1)]).evaluate();
        assert_eq!(result.evaluate(), lhs);
        assert_eq!(lhs.images(), &[4, 3, 1, 2]);
    }

    #[test]
    fn exchange_case_two() {
        let result = exchange_sn(5, 3, 3, 1, 5).unwrap();
        assert_eq!(result.factors(), &[(3, 1), (4, 2), (5, 4)]);
        let lhs = word(5, &[(Gen::T(5), 3), (Gen::T(3), 1)]).evaluate();
        assert_eq!(result.evaluate(), lhs);
    }

    #[test]
    fn exchange_case_three() {
        let result = exchange_sn(5, 4, 3, 2, 5).unwrap();
        assert_eq!(result.factors(), &[(2, 1), (4, 1), (5, 3)]);
        let lhs = word(5, &[(Gen::T(5), 4), (Gen::T(3), 2)]).evaluate();
        assert_eq!(result.evaluate(), lhs);
    }

    #[test]
    fn exchange_rejects_bad_arguments() {
        assert!(exchange_sn(3, 1, 3, 1, 5).is_err());
        assert!(exchange_sn(5, 0, 3, 1, 5).is_err());
        assert!(exchange_sn(5, 5, 3, 1, 5).is_err());
        assert!(exchange_sn(5, 1, 3, 3, 5).is_err());
        assert!(exchange_sn(6, 1, 3, 1, 5).is_err());
    }

    #[test]
    fn exchange_soundness_exhaustive_small() {
        for q in 3..=7usize {
            for p in 2..q {
                for i_q in 1..q {
                    for i_p in 1..p {
                        let rhs = exchange_sn(q, i_q, p, i_p, q).unwrap();
                        let lhs = word(q, &[(Gen::T(q), i_q as i64), (Gen::T(p), i_p as i64)])
                            .evaluate();
                        assert_eq!(rhs.evaluate(), lhs, "q={q} i_q={i_q} p={p} i_p={i_p}");
                        let subs: Vec<usize> = rhs.factors().iter().map(|&(m, _)| m).collect();
                        assert!(subs.windows(2).all(|w| w[0] < w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let w = word(4, &[(Gen::T(4), 1), (Gen::T(3), 1)]);
        let normalized = normalize_sn(&w).unwrap();
        assert_eq!(normalized.form.exponents(), &[1, 0, 2]);
        assert_eq!(normalized.form.print(), "t2^1 * t4^2");

        let w = word(4, &[(Gen::T(3), 1), (Gen::T(4), 1)]);
        assert_eq!(normalize_sn(&w).unwrap().form.exponents(), &[0, 1, 1]);

        let w = word(5, &[(Gen::T(5), 2), (Gen::T(5), 3)]);
        let normalized = normalize_sn(&w).unwrap();
        assert!(decode_sn(&normalized.form).is_identity());
        assert_eq!(normalized.form.print(), "e");
    }

    #[test]
    fn normalize_rejects_non_t_words() {
        let w = word(4, &[(Gen::U(4), 1)]);
        assert!(normalize_sn(&w).is_err());
    }

    #[test]
    fn normalize_handles_negative_exponents() {
        let w = word(6, &[(Gen::T(6), -5), (Gen::T(4), 7), (Gen::T(3), -1)]);
        let normalized = normalize_sn(&w).unwrap();
        assert_eq!(normalized.form, encode_sn(&w.evaluate()));
    }

    #[test]
    fn maj_examples() {
        assert_eq!(maj_of_form(&SnCanonicalForm::identity(5)), 0);
        let c = SnCanonicalForm::new(4, vec![0, 1, 1]).unwrap();
        assert_eq!(maj_of_form(&c), 2);
        assert_eq!(decode_sn(&c).major_index(), 2);
        let c = SnCanonicalForm::new(3, vec![0, 2]).unwrap();
        assert_eq!(maj_of_form(&c), 2);
        assert_eq!(decode_sn(&c).images(), &[2, 3, 1]);
        assert_eq!(decode_sn(&c).major_index(), 2);
    }

    #[test]
    fn form_text_round_trip() {
        let c = SnCanonicalForm::new(4, vec![1, 0, 2]).unwrap();
        assert_eq!(c.print(), "t2^1 * t4^2");
        assert_eq!(SnCanonicalForm::parse("t2^1 * t4^2", 4).unwrap(), c);
        assert_eq!(
            SnCanonicalForm::parse("e", 4).unwrap(),
            SnCanonicalForm::identity(4)
        );
        // exponent omitted means 1
        assert_eq!(
            SnCanonicalForm::parse("t3", 4).unwrap().exponents(),
            &[0, 1, 0]
        );
    }

    #[test]
    fn form_text_errors() {
        assert!(matches!(
            SnCanonicalForm::parse("t4^5", 4),
            Err(Error::ExponentOutOfBounds { subscript: 4, exponent: 5 })
        ));
        assert!(SnCanonicalForm::parse("t4 * t3", 4).is_err());
        assert!(SnCanonicalForm::parse("t3 * t3", 4).is_err());
        assert!(SnCanonicalForm::parse("t5", 4).is_err());
        assert!(SnCanonicalForm::parse("u4", 4).is_err());
        assert!(SnCanonicalForm::parse("t3^-1", 4).is_err());
    }
}
