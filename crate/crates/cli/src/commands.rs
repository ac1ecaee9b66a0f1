use std::io::Write;

use anyhow::{Context, Result};
use hookcsp::bijection::Multiset;
use hookcsp::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{FamilyArgs, HookFamilyArgs, ReportFormat, TableauInput};
use crate::input::read_tableau;

/// What a successful command found; a failed check maps to exit code 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    CheckFailed,
}

pub fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn polynomial_json(p: &IntPolynomial) -> serde_json::Value {
    json!({ "coeffs": p.coeffs(), "display": p.to_string() })
}

pub fn enumerate<W: Write>(out: &mut W, family: &FamilyArgs) -> Result<Outcome> {
    let (family, hook) = family.resolve()?;
    let mut members = match hook {
        Some(shape) => enumerate_hook_arm(shape, &family.content)?,
        None => enumerate_generic(&family),
    };
    // both routes list the same set; sort so either spelling prints the same lines
    members.sort_by_cached_key(Tableau::reading_word);
    for t in &members {
        write_json(out, t)?;
    }
    Ok(Outcome::Ok)
}

pub fn promote_cmd<W: Write>(out: &mut W, input: &TableauInput, power: u64) -> Result<Outcome> {
    let t = read_tableau(input)?;
    write_json(out, &promote_power(&t, power)?)?;
    Ok(Outcome::Ok)
}

pub fn orbit_cmd<W: Write>(out: &mut W, input: &TableauInput, step: u64) -> Result<Outcome> {
    let t = read_tableau(input)?;
    let o = orbit(&t, step)?;
    write_json(out, &json!({ "step": o.step, "order": o.order(), "members": o.members }))?;
    Ok(Outcome::Ok)
}

pub fn cocharge_cmd<W: Write>(out: &mut W, word: Option<&[u32]>, input: &TableauInput) -> Result<Outcome> {
    let word = match word {
        Some(w) => w.to_vec(),
        None => read_tableau(input)?.reading_word(),
    };
    let subwords = standard_subwords(&word)?;
    let cocharge = cocharge_word(&word)?;
    let charge = statistics::charge_word(&word)?;
    write_json(
        out,
        &json!({ "word": word, "subwords": subwords.subwords, "cocharge": cocharge, "charge": charge }),
    )?;
    Ok(Outcome::Ok)
}

pub fn kostka_cmd<W: Write>(out: &mut W, family: &FamilyArgs, modified: bool) -> Result<Outcome> {
    let (family, _) = family.resolve()?;
    let p = if modified { modified_kostka_foulkes(&family) } else { kostka_foulkes(&family) };
    write_json(
        out,
        &json!({
            "shape": family.shape,
            "content": family.content,
            "modified": modified,
            "polynomial": polynomial_json(&p),
        }),
    )?;
    Ok(Outcome::Ok)
}

pub fn phi_cmd<W: Write>(out: &mut W, input: &TableauInput) -> Result<Outcome> {
    let t = read_tableau(input)?;
    write_json(out, &phi(&t)?)?;
    Ok(Outcome::Ok)
}

pub fn phi_inverse_cmd<W: Write>(out: &mut W, family: &HookFamilyArgs, letters: &[u32]) -> Result<Outcome> {
    let (shape, mu) = family.resolve()?;
    let a = Multiset::new(letters.to_vec(), 2, shape.alphabet())?;
    write_json(out, &phi_inverse(shape, &mu, &a)?)?;
    Ok(Outcome::Ok)
}

pub fn csp_verify_cmd<W: Write>(out: &mut W, family: &HookFamilyArgs, format: ReportFormat) -> Result<Outcome> {
    let (shape, mu) = family.resolve()?;
    let report = verify_csp(shape, &mu)?;
    if matches!(format, ReportFormat::Json | ReportFormat::Both) {
        write_json(out, &report)?;
    }
    if matches!(format, ReportFormat::Table | ReportFormat::Both) {
        writeln!(out, "{}", report.table())?;
    }
    Ok(if report.verdict { Outcome::Ok } else { Outcome::CheckFailed })
}

fn tab(rows: &[&[u32]], k: u32) -> Result<Tableau> {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect(), k).context("example tableau")
}

pub fn seed_examples<W: Write>(out: &mut W) -> Result<Outcome> {
    let mut all_ok = true;
    let mut check = |out: &mut W, name: &str, got: String, want: String| -> Result<()> {
        let ok = got == want;
        all_ok &= ok;
        writeln!(out, "{} {name}: {got}", if ok { "ok  " } else { "FAIL" })?;
        if !ok {
            writeln!(out, "     expected {want}")?;
        }
        Ok(())
    };
    let rows = |t: &Tableau| format!("{:?}", t.rows());

    let t = tab(&[&[1, 1, 2, 3, 5], &[2, 3, 4], &[3]], 5)?;
    check(out, "promotion of [[1,1,2,3,5],[2,3,4],[3]]", rows(&promote(&t)?), "[[1, 2, 2, 3, 4], [3, 4, 5], [4]]".into())?;

    let t = tab(&[&[1, 1, 2, 3], &[2, 3, 4, 5], &[5, 5]], 5)?;
    check(out, "promotion of [[1,1,2,3],[2,3,4,5],[5,5]]", rows(&promote(&t)?), "[[1, 1, 1, 4], [2, 2, 3, 5], [3, 4]]".into())?;

    let w = [3, 4, 4, 2, 2, 3, 1, 1, 1, 1, 2, 2, 3, 4];
    let d = standard_subwords(&w)?;
    check(out, "standard subwords of 34422311112234", format!("{:?}", d.subwords), "[[3, 2, 1, 4], [4, 2, 1, 3], [4, 3, 1, 2], [1, 2]]".into())?;
    check(out, "cocharge of 34422311112234", cocharge_word(&w)?.to_string(), "12".into())?;

    let shape = HookArmShape::new(12, 5, 4)?;
    let mu = Composition::new(vec![6, 4, 4, 7, 5, 6]);
    let profile = beta_profile(shape, &mu)?;
    check(out, "gamma for (12,5^4), (6,4,4,7,5,6)", format!("{:?}", profile.gamma), "[1, 0, 0, 2, 0, 1]".into())?;
    check(out, "beta", profile.beta.to_string(), "3".into())?;
    let t = tab(
        &[
            &[1, 1, 1, 1, 1, 1, 2, 4, 4, 4, 4, 6],
            &[2, 2, 2, 3, 3],
            &[3, 3, 4, 4, 4],
            &[5, 5, 5, 5, 5],
            &[6, 6, 6, 6, 6],
        ],
        6,
    )?;
    check(out, "phi of the (12,5^4) tableau", phi(&t)?.to_string(), "{2,4,4}".into())?;
    let report = verify_csp(shape, &mu)?;
    check(out, "family size", report.family_size.to_string(), "35".into())?;
    check(out, "sieving polynomial", report.polynomial.to_string(), q_binomial(7, 3)?.to_string())?;
    check(out, "cyclic sieving verdict", report.verdict.to_string(), "true".into())?;
    writeln!(out, "{}", report.table())?;

    Ok(if all_ok { Outcome::Ok } else { Outcome::CheckFailed })
}
