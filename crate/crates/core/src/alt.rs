//! The ordered canonical form of the alternating group, its exchange law for
//! `v` powers, and the small catalogue of relation identities connecting the
//! `t`, `u`, and `v` generators.
//!
//! Every even permutation of `{1..n}` (n >= 3) is a unique product over the
//! ascending generator sequence `t_3, u_4, v_4, t_5, u_6, v_6, ...`, ending
//! at `t_n` for odd `n` and at `v_n` for even `n`, with exponent bounds
//! `i_3 < 3`, `j_{2r} < 2`, `k_{2r} < r`, `i_{2r+1} < 2r+1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gens::{t, u, v, Gen, GeneratorWord};
use crate::perm::{describe, Lexer, Parity, Permutation};
use crate::sn::{exchange_case, exchange_rhs_raw, exchange_sn};

/// One block of the alternating canonical form: the exponents of `u_{2r}`,
/// `v_{2r}`, and (when `2r+1 <= n`) `t_{2r+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AltBlock {
    pub j: usize,
    pub k: usize,
    pub i_top: Option<usize>,
}

/// The block-structured exponent record of an even permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltCanonicalForm {
    degree: usize,
    i3: usize,
    blocks: Vec<AltBlock>,
}

impl AltCanonicalForm {
    /// Validates bounds: `i3 < 3` and, for the block at `r`, `j < 2`,
    /// `k < r`, and `i_top < 2r+1` present exactly when `2r+1 <= n`.
    pub fn new(degree: usize, i3: usize, blocks: Vec<AltBlock>) -> Result<AltCanonicalForm> {
        if degree < 3 {
            return Err(Error::DegreeTooSmall { degree, min: 3 });
        }
        if i3 >= 3 {
            return Err(Error::ExponentOutOfBounds {
                subscript: 3,
                exponent: i3 as i64,
            });
        }
        let expected_blocks = degree / 2 - 1;
        if blocks.len() != expected_blocks {
            return Err(Error::Parse(format!(
                "expected {} blocks for degree {}, got {}",
                expected_blocks,
                degree,
                blocks.len()
            )));
        }
        for (idx, block) in blocks.iter().enumerate() {
            let r = idx + 2;
            if block.j >= 2 {
                return Err(Error::ExponentOutOfBounds {
                    subscript: 2 * r,
                    exponent: block.j as i64,
                });
            }
            if block.k >= r {
                return Err(Error::ExponentOutOfBounds {
                    subscript: 2 * r,
                    exponent: block.k as i64,
                });
            }
            let top_expected = 2 * r < degree;
            match block.i_top {
                Some(i) if top_expected => {
                    if i > 2 * r {
                        return Err(Error::ExponentOutOfBounds {
                            subscript: 2 * r + 1,
                            exponent: i as i64,
                        });
                    }
                }
                None if !top_expected => {}
                _ => {
                    return Err(Error::Parse(format!(
                        "block r={r} must carry a t{} exponent iff {} <= {degree}",
                        2 * r + 1,
                        2 * r + 1
                    )));
                }
            }
        }
        Ok(AltCanonicalForm { degree, i3, blocks })
    }

    pub fn identity(degree: usize) -> Result<AltCanonicalForm> {
        let bounds = AltCanonicalForm::tuple_bounds(degree)?;
        AltCanonicalForm::from_tuple(degree, &vec![0; bounds.len()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn i3(&self) -> usize {
        self.i3
    }

    pub fn blocks(&self) -> &[AltBlock] {
        &self.blocks
    }

    /// The exclusive bound of each tuple position, in decode order.
    ///
    /// The product of these bounds is `n!/2`.
    pub fn tuple_bounds(degree: usize) -> Result<Vec<usize>> {
        if degree < 3 {
            return Err(Error::DegreeTooSmall { degree, min: 3 });
        }
        let mut bounds = vec![3];
        for r in 2..=degree / 2 {
            bounds.push(2);
            bounds.push(r);
            if 2 * r < degree {
                bounds.push(2 * r + 1);
            }
        }
        Ok(bounds)
    }

    /// Flattens to `(i3, j4, k4, i5, j6, k6, i7, ...)` in decode order.
    pub fn to_tuple(&self) -> Vec<usize> {
        let mut tuple = vec![self.i3];
        for block in &self.blocks {
            tuple.push(block.j);
            tuple.push(block.k);
            if let Some(i) = block.i_top {
                tuple.push(i);
            }
        }
        tuple
    }

    pub fn from_tuple(degree: usize, tuple: &[usize]) -> Result<AltCanonicalForm> {
        let bounds = AltCanonicalForm::tuple_bounds(degree)?;
        if tuple.len() != bounds.len() {
            return Err(Error::Parse(format!(
                "expected a tuple of length {} for degree {}, got {}",
                bounds.len(),
                degree,
                tuple.len()
            )));
        }
        let mut iter = tuple.iter().copied();
        let i3 = iter.next().unwrap();
        let mut blocks = Vec::new();
        for r in 2..=degree / 2 {
            let j = iter.next().unwrap();
            let k = iter.next().unwrap();
            let i_top = if 2 * r < degree {
                Some(iter.next().unwrap())
            } else {
                None
            };
            blocks.push(AltBlock { j, k, i_top });
        }
        AltCanonicalForm::new(degree, i3, blocks)
    }

    /// The generator word in decode order, zero factors omitted.
    pub fn to_word(&self) -> GeneratorWord {
        let mut letters: Vec<(Gen, i64)> = Vec::new();
        if self.i3 != 0 {
            letters.push((Gen::T(3), self.i3 as i64));
        }
        for (idx, block) in self.blocks.iter().enumerate() {
            let r = idx + 2;
            if block.j != 0 {
                letters.push((Gen::U(2 * r), block.j as i64));
            }
            if block.k != 0 {
                letters.push((Gen::V(2 * r), block.k as i64));
            }
            if let Some(i) = block.i_top {
                if i != 0 {
                    letters.push((Gen::T(2 * r + 1), i as i64));
                }
            }
        }
        GeneratorWord::new(self.degree, letters).expect("validated form")
    }

    /// Renders `t3^a * u4^b * v4^c * t5^d * ...`; the identity renders `e`.
    pub fn print(&self) -> String {
        self.to_word().print()
    }

    /// Parses the rendering grammar, enforcing decode order and bounds.
    pub fn parse(text: &str, degree: usize) -> Result<AltCanonicalForm> {
        let bounds = AltCanonicalForm::tuple_bounds(degree)?;
        let slots = form_slots(degree);
        let mut tuple = vec![0usize; bounds.len()];

        let mut lex = Lexer::new(text);
        if lex.peek() == Some('e') {
            lex.bump();
            lex.end()?;
            return AltCanonicalForm::from_tuple(degree, &tuple);
        }
        let mut next_slot = 0usize;
        loop {
            let sym = match lex.peek() {
                Some(c @ ('t' | 'u' | 'v')) => {
                    lex.bump();
                    c
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected 't', 'u', or 'v', found {}",
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
            let slot = slots[next_slot..]
                .iter()
                .position(|&(c, i)| c == sym && i == index)
                .map(|offset| next_slot + offset)
                .ok_or_else(|| {
                    Error::Parse(format!(
                        "{sym}{index} is not a form factor here (factors must follow \
                         the ascending generator order)"
                    ))
                })?;
            if exponent < 0 || exponent as usize >= bounds[slot] {
                return Err(Error::ExponentOutOfBounds {
                    subscript: index,
                    exponent,
                });
            }
            tuple[slot] = exponent as usize;
            next_slot = slot + 1;
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
        AltCanonicalForm::from_tuple(degree, &tuple)
    }
}

impl fmt::Display for AltCanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print())
    }
}

/// `(symbol, subscript)` of each tuple position, in decode order.
fn form_slots(degree: usize) -> Vec<(char, usize)> {
    let mut slots = vec![('t', 3)];
    for r in 2..=degree / 2 {
        slots.push(('u', 2 * r));
        slots.push(('v', 2 * r));
        if 2 * r < degree {
            slots.push(('t', 2 * r + 1));
        }
    }
    slots
}

/// Evaluates the canonical form to its permutation: the left-to-right
/// product in ascending generator order.
pub fn decode_alt(c: &AltCanonicalForm) -> Permutation {
    c.to_word().evaluate()
}

/// Encodes an even permutation by peeling the top point level by level.
///
/// At an odd level `m` the coset representative is `t_m^{i_m}` with
/// `g(m) = m - i_m`; at an even level it is `u_m^{j} v_m^{k}` with
/// `g(m) = m - 2k` when `g(m)` is even and `g(m) = m - 1 - 2k` when odd.
pub fn encode_alt(p: &Permutation) -> Result<AltCanonicalForm> {
    let n = p.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n, min: 3 });
    }
    if p.parity() != Parity::Even {
        return Err(Error::OddPermutation);
    }
    let mut g = p.clone();
    let mut blocks = vec![
        AltBlock {
            j: 0,
            k: 0,
            i_top: None
        };
        n / 2 - 1
    ];
    for m in (4..=n).rev() {
        if m % 2 == 1 {
            let i_m = (m - g.apply(m)) % m;
            blocks[(m - 1) / 2 - 2].i_top = Some(i_m);
            if i_m != 0 {
                g = g
                    .compose(&t(m, n).expect("m <= n").pow(-(i_m as i64)))
                    .expect("equal degrees");
            }
        } else {
            let image = g.apply(m);
            let (j, k) = if image.is_multiple_of(2) {
                (0, (m - image) / 2)
            } else {
                (1, (m - 1 - image) / 2)
            };
            let block = &mut blocks[m / 2 - 2];
            block.j = j;
            block.k = k;
            if k != 0 {
                g = g
                    .compose(&v(m, n).expect("m <= n").pow(-(k as i64)))
                    .expect("equal degrees");
            }
            if j != 0 {
                g = g
                    .compose(&u(m, n).expect("m <= n").inverse())
                    .expect("equal degrees");
            }
        }
    }
    let i3 = (3 - g.apply(3)) % 3;
    debug_assert!(
        g.compose(&t(3, n).unwrap().pow(-(i3 as i64)))
            .unwrap()
            .is_identity(),
        "residue after peeling must be a power of t3"
    );
    AltCanonicalForm::new(n, i3, blocks)
}

/// An ordered product of `v` powers with reduced exponents; the carrier for
/// the `v` exchange law's right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPowerProduct {
    degree: usize,
    factors: Vec<(usize, usize)>,
}

impl VPowerProduct {
    /// Reduces raw `(even subscript, exponent)` pairs: `v_{2m}` has order
    /// `m`, subscripts of 2 or less denote the identity, and adjacent equal
    /// subscripts merge.
    pub fn from_raw(degree: usize, raw: &[(i64, i64)]) -> VPowerProduct {
        let mut factors: Vec<(usize, usize)> = Vec::with_capacity(raw.len());
        for &(subscript, exponent) in raw {
            debug_assert!(subscript % 2 == 0, "v subscripts are even");
            if subscript <= 2 {
                continue;
            }
            let half = subscript / 2;
            let e = exponent.rem_euclid(half) as usize;
            if e == 0 {
                continue;
            }
            let sub = subscript as usize;
            if let Some(last) = factors.last_mut() {
                if last.0 == sub {
                    last.1 = (last.1 + e) % (sub / 2);
                    if last.1 == 0 {
                        factors.pop();
                    }
                    continue;
                }
            }
            factors.push((sub, e));
        }
        VPowerProduct { degree, factors }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn evaluate(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for &(sub, e) in &self.factors {
            acc = acc
                .compose(&v(sub, self.degree).expect("subscript in range").pow(e as i64))
                .expect("equal degrees");
        }
        acc
    }

    pub fn to_word(&self) -> GeneratorWord {
        let letters: Vec<(Gen, i64)> = self
            .factors
            .iter()
            .map(|&(sub, e)| (Gen::V(sub), e as i64))
            .collect();
        GeneratorWord::new(self.degree, letters).expect("subscripts in range")
    }
}

fn check_v_exchange_args(q: usize, k_q: usize, p: usize, k_p: usize, n: usize) -> Result<()> {
    if !(2 <= p && p < q && 2 * q <= n) {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 2 <= p < q <= n/2, got p={p}, q={q}, n={n}"
        )));
    }
    if !(1 <= k_q && k_q < q) || !(1 <= k_p && k_p < p) {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 1 <= k_2q < q and 1 <= k_2p < p, got k_2q={k_q}, k_2p={k_p}"
        )));
    }
    Ok(())
}

pub(crate) fn v_exchange_with_case(
    case: u8,
    q: usize,
    k_q: usize,
    p: usize,
    k_p: usize,
    n: usize,
) -> VPowerProduct {
    let raw: Vec<(i64, i64)> = exchange_rhs_raw(case, q as i64, k_q as i64, p as i64, k_p as i64)
        .into_iter()
        .map(|(sub, e)| (2 * sub, e))
        .collect();
    VPowerProduct::from_raw(n, &raw)
}

/// Rewrites the out-of-order product `v_{2q}^{k_2q} * v_{2p}^{k_2p}`
/// (with `p < q`) into an ordered product of `v` powers evaluating to the
/// same permutation. The case analysis matches the `t`-power exchange law
/// with all subscripts doubled.
pub fn v_exchange(q: usize, k_2q: usize, p: usize, k_2p: usize, n: usize) -> Result<VPowerProduct> {
    check_v_exchange_args(q, k_2q, p, k_2p, n)?;
    let case = exchange_case(q, k_2q, p, k_2p);
    Ok(v_exchange_with_case(case, q, k_2q, p, k_2p, n))
}

/// The same rewrite obtained by delegating to the `t`-power exchange law
/// (since `v_{2m} = t_{2m}^2` squares the subscript structure) and doubling
/// the subscripts of the result. Cross-checked against [`v_exchange`].
pub fn v_exchange_via_sn(
    q: usize,
    k_2q: usize,
    p: usize,
    k_2p: usize,
    n: usize,
) -> Result<VPowerProduct> {
    check_v_exchange_args(q, k_2q, p, k_2p, n)?;
    let t_product = exchange_sn(q, k_2q, p, k_2p, q)?;
    let raw: Vec<(i64, i64)> = t_product
        .factors()
        .iter()
        .map(|&(m, e)| (2 * m as i64, e as i64))
        .collect();
    Ok(VPowerProduct::from_raw(n, &raw))
}

/// The five exchange laws of the alternating group on four points, as
/// `(left, right)` word pairs that evaluate to equal permutations.
pub fn alt4_exchange_table() -> Vec<(GeneratorWord, GeneratorWord)> {
    let w = |letters: &[(Gen, i64)]| GeneratorWord::new(4, letters.to_vec()).unwrap();
    vec![
        (
            w(&[(Gen::U(4), 1), (Gen::T(3), 1)]),
            w(&[(Gen::T(3), 1), (Gen::V(4), 1)]),
        ),
        (
            w(&[(Gen::U(4), 1), (Gen::T(3), 2)]),
            w(&[(Gen::T(3), 2), (Gen::U(4), 1), (Gen::V(4), 1)]),
        ),
        (
            w(&[(Gen::V(4), 1), (Gen::T(3), 1)]),
            w(&[(Gen::T(3), 1), (Gen::U(4), 1), (Gen::V(4), 1)]),
        ),
        (
            w(&[(Gen::V(4), 1), (Gen::T(3), 2)]),
            w(&[(Gen::T(3), 2), (Gen::U(4), 1)]),
        ),
        (
            w(&[(Gen::V(4), 1), (Gen::U(4), 1)]),
            w(&[(Gen::U(4), 1), (Gen::V(4), 1)]),
        ),
    ]
}

/// The two step relations at level `r`:
/// `t_{2r}^{-1} t_{2r+2} = t_{2r+1}^{-1} u_{2r+2}` and
/// `t_{2r} t_{2r+2} = v_{2r} t_{2r+1}^{-1} u_{2r+2}`.
pub fn rel_tt_step(r: usize, n: usize) -> Result<[(GeneratorWord, GeneratorWord); 2]> {
    if r < 2 || 2 * r + 2 > n {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 2 <= r and 2r+2 <= n, got r={r}, n={n}"
        )));
    }
    let w = |letters: &[(Gen, i64)]| GeneratorWord::new(n, letters.to_vec()).unwrap();
    Ok([
        (
            w(&[(Gen::T(2 * r), -1), (Gen::T(2 * r + 2), 1)]),
            w(&[(Gen::T(2 * r + 1), -1), (Gen::U(2 * r + 2), 1)]),
        ),
        (
            w(&[(Gen::T(2 * r), 1), (Gen::T(2 * r + 2), 1)]),
            w(&[
                (Gen::V(2 * r), 1),
                (Gen::T(2 * r + 1), -1),
                (Gen::U(2 * r + 2), 1),
            ]),
        ),
    ])
}

/// The telescoped relations for `r' > r`, with the right-hand core
/// `prod over odd m in [2r+1, 2r'-1] of t_m^{e} u_{m+1}`.
///
/// `invert_odd_t` selects the exponent `e` of the odd `t` factors: `-1`
/// (the form the step relation telescopes to) or `+1`. Only the inverted
/// form is an identity; the other candidate exists so the conventions
/// oracle can demonstrate that.
pub fn rel_tt_general_candidate(
    r: usize,
    r_prime: usize,
    n: usize,
    invert_odd_t: bool,
) -> Result<[(GeneratorWord, GeneratorWord); 2]> {
    if r < 2 || r_prime <= r || 2 * r_prime > n {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 2 <= r < r' and 2r' <= n, got r={r}, r'={r_prime}, n={n}"
        )));
    }
    let t_exp = if invert_odd_t { -1 } else { 1 };
    let mut core: Vec<(Gen, i64)> = Vec::new();
    let mut m = 2 * r + 1;
    while m < 2 * r_prime {
        core.push((Gen::T(m), t_exp));
        core.push((Gen::U(m + 1), 1));
        m += 2;
    }
    let mut with_v = vec![(Gen::V(2 * r), 1)];
    with_v.extend_from_slice(&core);
    let w = |letters: Vec<(Gen, i64)>| GeneratorWord::new(n, letters).unwrap();
    Ok([
        (
            w(vec![(Gen::T(2 * r), -1), (Gen::T(2 * r_prime), 1)]),
            w(core),
        ),
        (
            w(vec![(Gen::T(2 * r), 1), (Gen::T(2 * r_prime), 1)]),
            w(with_v),
        ),
    ])
}

/// The certified general relations (inverted odd `t` factors).
pub fn rel_tt_general(
    r: usize,
    r_prime: usize,
    n: usize,
) -> Result<[(GeneratorWord, GeneratorWord); 2]> {
    rel_tt_general_candidate(r, r_prime, n, true)
}

/// `v_{2r} u_{2r} = prod_{i=2}^{r-1}(u_{2i} t_{2i+1}^{-1}) u_{2r} v_{2r}`
/// for `r >= 3`.
pub fn rel_vu(r: usize, n: usize) -> Result<(GeneratorWord, GeneratorWord)> {
    if r < 3 || 2 * r > n {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 3 <= r and 2r <= n, got r={r}, n={n}"
        )));
    }
    let left = GeneratorWord::new(n, vec![(Gen::V(2 * r), 1), (Gen::U(2 * r), 1)]).unwrap();
    let mut letters: Vec<(Gen, i64)> = Vec::new();
    for i in 2..r {
        letters.push((Gen::U(2 * i), 1));
        letters.push((Gen::T(2 * i + 1), -1));
    }
    letters.push((Gen::U(2 * r), 1));
    letters.push((Gen::V(2 * r), 1));
    let right = GeneratorWord::new(n, letters).unwrap();
    Ok((left, right))
}

/// `t_{2r'-1} t_{2r-1} = prod_{i=2}^{r}(t_{2i-1}^{-1} u_{2i}) t_{2r'-1}`
/// for `r' > r >= 2`.
pub fn rel_t_odd(r: usize, r_prime: usize, n: usize) -> Result<(GeneratorWord, GeneratorWord)> {
    if r < 2 || r_prime <= r || 2 * r_prime - 1 > n {
        return Err(Error::InvalidExchangeArgs(format!(
            "need 2 <= r < r' and 2r'-1 <= n, got r={r}, r'={r_prime}, n={n}"
        )));
    }
    let left = GeneratorWord::new(
        n,
        vec![(Gen::T(2 * r_prime - 1), 1), (Gen::T(2 * r - 1), 1)],
    )
    .unwrap();
    let mut letters: Vec<(Gen, i64)> = Vec::new();
    for i in 2..=r {
        letters.push((Gen::T(2 * i - 1), -1));
        letters.push((Gen::U(2 * i), 1));
    }
    letters.push((Gen::T(2 * r_prime - 1), 1));
    let right = GeneratorWord::new(n, letters).unwrap();
    Ok((left, right))
}
