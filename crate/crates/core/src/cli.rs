//! Command dispatch behind the `ogs` binary: encode, decode, normalize,
//! verify, table, stats, and convert over the text grammars.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input/parse/bounds error,
//! 3 domain error (parity).

use std::fmt::Write as _;

use crate::alt::{decode_alt, encode_alt, AltCanonicalForm};
use crate::error::{Error, Result};
use crate::gens::GeneratorWord;
use crate::perm::Permutation;
use crate::sn::{decode_sn, encode_sn, normalize_sn, SnCanonicalForm};
use crate::verify::{
    self, alt4_suite, certify_uniqueness, enumeration_suite, exchange_overlap_suite,
    exchange_suite, fuzz_normalizer, generator_facts_suite, maj_suite, rel_t_odd_suite,
    rel_tt_general_suite, rel_tt_step_suite, rel_vu_suite, v_exchange_overlap_suite,
    v_exchange_suite, Group, VerificationReport,
};

/// Default degree ceiling for `table` without `--force`.
pub const TABLE_BUDGET: usize = 7;
/// Default uniqueness ceiling for the full symmetric group.
pub const UNIQUENESS_BUDGET_SYM: usize = 8;
/// Default uniqueness ceiling for the alternating group.
pub const UNIQUENESS_BUDGET_ALT: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Encode,
    Decode,
    Normalize,
    Verify,
    Table,
    Stats,
    Convert,
}

/// A parsed invocation.
#[derive(Debug, Clone)]
pub struct Command {
    pub verb: Verb,
    pub group: Option<Group>,
    pub degree: Option<usize>,
    pub nmax: usize,
    pub seed: u64,
    pub suite: Option<String>,
    pub force: bool,
    pub input: Option<String>,
}

impl Command {
    pub fn new(verb: Verb) -> Command {
        Command {
            verb,
            group: None,
            degree: None,
            nmax: 8,
            seed: 1,
            suite: None,
            force: false,
            input: None,
        }
    }
}

/// What a command run produced; the caller prints and exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Outcome {
        Outcome {
            exit_code: exit_code_for(err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::OddPermutation => 3,
        _ => 2,
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match cmd.verb {
        Verb::Verify => run_verify(cmd),
        _ => match run_text_verb(cmd) {
            Ok(stdout) => Outcome::ok(stdout),
            Err(err) => Outcome::error(&err),
        },
    }
}

fn require_input(cmd: &Command) -> Result<&str> {
    cmd.input
        .as_deref()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::Parse("missing input".into()))
}

fn require_degree(cmd: &Command) -> Result<usize> {
    let n = cmd
        .degree
        .ok_or_else(|| Error::Parse("missing degree".into()))?;
    let min = match cmd.group {
        Some(Group::Alternating) => 3,
        Some(Group::Symmetric) => 2,
        None => 1,
    };
    if n < min {
        return Err(Error::DegreeTooSmall { degree: n, min });
    }
    Ok(n)
}

fn require_group(cmd: &Command) -> Result<Group> {
    cmd.group
        .ok_or_else(|| Error::Parse("missing group (sym or alt)".into()))
}

/// Parses a permutation in either notation, keyed on the leading bracket.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let p = Permutation::parse_one_line(trimmed)?;
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: n,
            });
        }
        Ok(p)
    } else if trimmed.starts_with('(') {
        Permutation::parse_cycles(trimmed, n)
    } else {
        Err(Error::Parse(
            "permutation input must start with '[' or '('".into(),
        ))
    }
}

fn run_text_verb(cmd: &Command) -> Result<String> {
    match cmd.verb {
        Verb::Encode => {
            let group = require_group(cmd)?;
            let n = require_degree(cmd)?;
            let p = parse_permutation(require_input(cmd)?, n)?;
            let rendered = match group {
                Group::Symmetric => encode_sn(&p).print(),
                Group::Alternating => encode_alt(&p)?.print(),
            };
            Ok(format!("{rendered}\n"))
        }
        Verb::Decode => {
            let group = require_group(cmd)?;
            let n = require_degree(cmd)?;
            let text = require_input(cmd)?;
            let p = match group {
                Group::Symmetric => decode_sn(&SnCanonicalForm::parse(text, n)?),
                Group::Alternating => decode_alt(&AltCanonicalForm::parse(text, n)?),
            };
            Ok(format!("{} = {}\n", p.print_one_line(), p.print_cycles()))
        }
        Verb::Normalize => {
            let group = require_group(cmd)?;
            let n = require_degree(cmd)?;
            let word = GeneratorWord::parse(require_input(cmd)?, n)?;
            let rendered = match group {
                Group::Symmetric => normalize_sn(&word)?.form.print(),
                Group::Alternating => encode_alt(&word.evaluate())?.print(),
            };
            Ok(format!("{rendered}\n"))
        }
        Verb::Table => run_table(cmd),
        Verb::Stats => {
            let n = require_degree(cmd)?;
            let p = parse_permutation(require_input(cmd)?, n)?;
            let descents = p.descent_set();
            let rendered: Vec<String> = descents.iter().map(|d| d.to_string()).collect();
            let mut out = String::new();
            writeln!(out, "descents\t{{{}}}", rendered.join(",")).unwrap();
            writeln!(out, "maj\t{}", p.major_index()).unwrap();
            writeln!(out, "inversions\t{}", p.inversion_length()).unwrap();
            writeln!(out, "parity\t{}", p.parity()).unwrap();
            writeln!(out, "order\t{}", p.order()).unwrap();
            Ok(out)
        }
        Verb::Convert => {
            let n = require_degree(cmd)?;
            let text = require_input(cmd)?.trim();
            if text.starts_with('[') {
                let p = parse_permutation(text, n)?;
                Ok(format!("{}\n", p.print_cycles()))
            } else {
                let p = parse_permutation(text, n)?;
                Ok(format!("{}\n", p.print_one_line()))
            }
        }
        Verb::Verify => unreachable!("verify is dispatched separately"),
    }
}

fn run_table(cmd: &Command) -> Result<String> {
    let group = require_group(cmd)?;
    let n = require_degree(cmd)?;
    if n > TABLE_BUDGET && !cmd.force {
        return Err(Error::Parse(format!(
            "table at degree {n} exceeds the default budget of {TABLE_BUDGET}; pass --force"
        )));
    }
    let bounds = match group {
        Group::Symmetric => (2..=n).collect::<Vec<_>>(),
        Group::Alternating => AltCanonicalForm::tuple_bounds(n)?,
    };
    let mut out = String::from("tuple\toneline\tcycles\tmaj\n");
    for tuple in verify::Odometer::new(bounds) {
        let (rendered, p) = match group {
            Group::Symmetric => {
                let form = SnCanonicalForm::new(n, tuple)?;
                (form.print(), decode_sn(&form))
            }
            Group::Alternating => {
                let form = AltCanonicalForm::from_tuple(n, &tuple)?;
                (form.print(), decode_alt(&form))
            }
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            rendered,
            p.print_one_line(),
            p.print_cycles(),
            p.major_index()
        )
        .unwrap();
    }
    Ok(out)
}

fn uniqueness_range(group: Group, nmax: usize, force: bool) -> (usize, usize, Option<String>) {
    let (floor, budget) = match group {
        Group::Symmetric => (2, UNIQUENESS_BUDGET_SYM),
        Group::Alternating => (3, UNIQUENESS_BUDGET_ALT),
    };
    if nmax > budget && !force {
        let note = format!(
            "note: uniqueness_{group} capped at n={budget} (pass --force to exceed)\n"
        );
        (floor, budget, Some(note))
    } else {
        (floor, nmax, None)
    }
}

fn run_verify(cmd: &Command) -> Outcome {
    let nmax = cmd.nmax;
    let selector = cmd.suite.as_deref().unwrap_or("all");
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut stderr = String::new();

    let uniqueness = |reports: &mut Vec<VerificationReport>, stderr: &mut String| {
        let groups = match cmd.group {
            Some(g) => vec![g],
            None => vec![Group::Symmetric, Group::Alternating],
        };
        for group in groups {
            let (floor, ceil, note) = uniqueness_range(group, nmax, cmd.force);
            if let Some(note) = note {
                stderr.push_str(&note);
            }
            for n in floor..=ceil {
                reports.push(certify_uniqueness(n, group));
            }
        }
    };
    let fuzz = |reports: &mut Vec<VerificationReport>| {
        for n in 4..=nmax.min(8) {
            reports.push(fuzz_normalizer(n, 10_000, 30, cmd.seed));
        }
    };
    let conventions = |reports: &mut Vec<VerificationReport>, stderr: &mut String| {
        match verify::resolve_conventions() {
            Ok(resolution) => {
                writeln!(stderr, "{resolution}").unwrap();
                reports.push(resolution.summary());
            }
            Err(err) => {
                writeln!(stderr, "error: {err}").unwrap();
                reports.push(VerificationReport {
                    suite: "conventions".into(),
                    checked: 1,
                    passed: 0,
                    first_failure: Some(verify::Failure {
                        input: "convention resolution".into(),
                        expected: "a holding candidate".into(),
                        actual: err.to_string(),
                    }),
                    elapsed: std::time::Duration::ZERO,
                });
            }
        }
    };

    match selector {
        "all" => {
            reports.push(enumeration_suite(nmax.min(7)));
            uniqueness(&mut reports, &mut stderr);
            reports.push(generator_facts_suite(nmax));
            reports.push(exchange_suite(nmax));
            reports.push(exchange_overlap_suite(nmax));
            reports.push(v_exchange_suite(nmax));
            reports.push(v_exchange_overlap_suite(nmax));
            reports.push(alt4_suite());
            reports.push(rel_tt_step_suite(nmax));
            reports.push(rel_tt_general_suite(nmax));
            reports.push(rel_vu_suite(nmax));
            reports.push(rel_t_odd_suite(nmax));
            reports.push(maj_suite(nmax.min(7)));
            conventions(&mut reports, &mut stderr);
            fuzz(&mut reports);
        }
        "enumeration" => reports.push(enumeration_suite(nmax.min(7))),
        "uniqueness" => uniqueness(&mut reports, &mut stderr),
        "generators" => reports.push(generator_facts_suite(nmax)),
        "exchange" => {
            reports.push(exchange_suite(nmax));
            reports.push(exchange_overlap_suite(nmax));
        }
        "v_exchange" | "v-exchange" => {
            reports.push(v_exchange_suite(nmax));
            reports.push(v_exchange_overlap_suite(nmax));
        }
        "alt4" => reports.push(alt4_suite()),
        "relations" => {
            reports.push(rel_tt_step_suite(nmax));
            reports.push(rel_tt_general_suite(nmax));
            reports.push(rel_vu_suite(nmax));
            reports.push(rel_t_odd_suite(nmax));
        }
        "maj" => reports.push(maj_suite(nmax.min(7))),
        "conventions" => conventions(&mut reports, &mut stderr),
        "fuzz" => fuzz(&mut reports),
        other => {
            return Outcome::error(&Error::Parse(format!(
                "unknown suite '{other}' (expected one of: all, enumeration, uniqueness, \
                 generators, exchange, v_exchange, alt4, relations, maj, conventions, fuzz)"
            )))
        }
    }

    let mut stdout = String::from(VerificationReport::TSV_HEADER);
    stdout.push('\n');
    let mut all_passed = true;
    for report in &reports {
        stdout.push_str(&report.tsv_line());
        stdout.push('\n');
        all_passed &= report.all_passed();
    }
    Outcome {
        exit_code: if all_passed { 0 } else { 1 },
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cmd(verb: Verb, group: Option<Group>, n: Option<usize>, input: &str) -> Command {
        let mut c = Command::new(verb);
        c.group = group;
        c.degree = n;
        c.input = Some(input.to_string());
        c
    }

    #[test]
    fn encode_examples() {
        let out = run(&cmd(
            Verb::Encode,
            Some(Group::Symmetric),
            Some(4),
            "[2;4;1;3]",
        ));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "t3^1 * t4^1\n");

        let out = run(&cmd(
            Verb::Encode,
            Some(Group::Alternating),
            Some(5),
            "(3,4,5)",
        ));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "v4^1 * t5^2\n");
    }

    #[test]
    fn encode_parity_error_is_exit_3() {
        let out = run(&cmd(
            Verb::Encode,
            Some(Group::Alternating),
            Some(4),
            "(1,2)",
        ));
        assert_eq!(out.exit_code, 3);
        assert!(out.stderr.contains("even"));
    }

    #[test]
    fn decode_examples() {
        let out = run(&cmd(Verb::Decode, Some(Group::Alternating), Some(4), "u4^1"));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "[2;1;4;3] = (4,3)(2,1)\n");

        let out = run(&cmd(
            Verb::Decode,
            Some(Group::Symmetric),
            Some(4),
            "t2^1 * t4^2",
        ));
        assert_eq!(out.stdout, "[4;3;1;2] = (4,2,3,1)\n");

        let out = run(&cmd(Verb::Decode, Some(Group::Symmetric), Some(4), "t4^5"));
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn normalize_examples() {
        let out = run(&cmd(
            Verb::Normalize,
            Some(Group::Symmetric),
            Some(4),
            "t4^1 * t3^1",
        ));
        assert_eq!(out.stdout, "t2^1 * t4^2\n");

        // alternating normalization goes through evaluate-then-encode
        let out = run(&cmd(
            Verb::Normalize,
            Some(Group::Alternating),
            Some(4),
            "v4 * u4",
        ));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "u4^1 * v4^1\n");

        let out = run(&cmd(
            Verb::Normalize,
            Some(Group::Alternating),
            Some(4),
            "s1",
        ));
        assert_eq!(out.exit_code, 3);
    }

    #[test]
    fn stats_example() {
        let out = run(&cmd(Verb::Stats, None, Some(3), "[3;1;2]"));
        assert_eq!(out.exit_code, 0);
        assert_eq!(
            out.stdout,
            "descents\t{1}\nmaj\t1\ninversions\t2\nparity\teven\norder\t3\n"
        );

        let out = run(&cmd(Verb::Stats, None, Some(5), "[1;2;3;4;5]"));
        assert_eq!(
            out.stdout,
            "descents\t{}\nmaj\t0\ninversions\t0\nparity\teven\norder\t1\n"
        );

        let out = run(&cmd(Verb::Stats, None, Some(4), "(1,2)(3,4)"));
        assert!(out.stdout.contains("parity\teven\norder\t2\n"));
    }

    #[test]
    fn convert_examples() {
        let out = run(&cmd(Verb::Convert, None, Some(5), "[3;4;1;5;2]"));
        assert_eq!(out.stdout, "(5,2,4)(3,1)\n");

        let out = run(&cmd(Verb::Convert, None, Some(4), "()"));
        assert_eq!(out.stdout, "[1;2;3;4]\n");

        let out = run(&cmd(Verb::Convert, None, Some(3), "(1,2,3)"));
        assert_eq!(out.stdout, "[2;3;1]\n");
    }

    #[test]
    fn table_row_counts() {
        let out = run(&cmd(Verb::Table, Some(Group::Alternating), Some(4), ""));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout.lines().count(), 1 + 12);

        let out = run(&cmd(Verb::Table, Some(Group::Symmetric), Some(3), ""));
        assert_eq!(out.stdout.lines().count(), 1 + 6);

        let out = run(&cmd(Verb::Table, Some(Group::Alternating), Some(3), ""));
        assert_eq!(out.stdout.lines().count(), 1 + 3);
    }

    #[test]
    fn table_budget_needs_force() {
        let mut c = cmd(Verb::Table, Some(Group::Symmetric), Some(8), "");
        let out = run(&c);
        assert_eq!(out.exit_code, 2);
        c.force = true;
        c.degree = Some(8);
        // still a real run; just confirm it starts with the header
        let out = run(&c);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.starts_with("tuple\toneline\tcycles\tmaj\n"));
    }

    #[test]
    fn verify_selected_suites() {
        let mut c = Command::new(Verb::Verify);
        c.suite = Some("alt4".into());
        let out = run(&c);
        assert_eq!(out.exit_code, 0);
        let line = out.stdout.lines().nth(1).unwrap();
        assert!(line.starts_with("alt4_table\t5\t5\t"));

        let mut c = Command::new(Verb::Verify);
        c.suite = Some("uniqueness".into());
        c.group = Some(Group::Alternating);
        c.nmax = 4;
        let out = run(&c);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("uniqueness_alt_n4\t14\t14\t"));
    }

    #[test]
    fn verify_rejects_unknown_suite() {
        let mut c = Command::new(Verb::Verify);
        c.suite = Some("nonsense".into());
        let out = run(&c);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn degree_floors() {
        let out = run(&cmd(Verb::Encode, Some(Group::Alternating), Some(2), "()"));
        assert_eq!(out.exit_code, 2);
        let out = run(&cmd(Verb::Encode, Some(Group::Symmetric), Some(1), "[1]"));
        assert_eq!(out.exit_code, 2);
    }
}
