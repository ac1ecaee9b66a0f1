use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use hookcsp::{Composition, HookArmShape, Partition, SsytFamily, Tableau};

use crate::args::{FamilyArgs, HookFamilyArgs, TableauInput};

pub fn read_tableau(input: &TableauInput) -> Result<Tableau> {
    let text = match (&input.tableau, &input.file) {
        (Some(json), _) => json.clone(),
        (None, Some(path)) if path != Path::new("-") => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).context("reading tableau from stdin")?;
            buf
        }
    };
    serde_json::from_str(text.trim()).context("tableau JSON must be {\"alphabet\": k, \"rows\": [[...]]} and semistandard")
}

impl HookFamilyArgs {
    pub fn resolve(&self) -> Result<(HookArmShape, Composition)> {
        let shape = HookArmShape::new(self.m, self.n, self.b)?;
        let mu = Composition::new(self.mu.clone());
        check_content(shape.alphabet(), shape.cells(), &mu)?;
        Ok((shape, mu))
    }
}

impl FamilyArgs {
    /// The family, plus its hook-arm shape when it was given as `--m --n --b`.
    pub fn resolve(&self) -> Result<(SsytFamily, Option<HookArmShape>)> {
        let mu = Composition::new(self.mu.clone());
        match (&self.shape, self.m, self.n, self.b) {
            (Some(parts), ..) => {
                let shape = Partition::new(parts.clone())?;
                let family = SsytFamily::new(shape, mu);
                if !family.sizes_agree() {
                    bail!(
                        "content {} has {} cells but shape {} has {}",
                        family.content,
                        family.content.total(),
                        family.shape,
                        family.shape.weight()
                    );
                }
                Ok((family, None))
            }
            (None, Some(m), Some(n), Some(b)) => {
                let shape = HookArmShape::new(m, n, b)?;
                check_content(shape.alphabet(), shape.cells(), &mu)?;
                Ok((SsytFamily::hook_arm(shape, mu), Some(shape)))
            }
            _ => bail!("give the shape as --shape or as --m, --n and --b"),
        }
    }
}

fn check_content(alphabet: u32, cells: u32, mu: &Composition) -> Result<()> {
    if mu.len() != alphabet as usize {
        bail!("content {mu} must have b + 2 = {alphabet} parts");
    }
    if mu.total() != cells {
        bail!("content {mu} sums to {} but the shape has {cells} cells", mu.total());
    }
    Ok(())
}

/// `"lo:hi"` or `"v"`, inclusive.
pub fn parse_range(text: &str) -> Result<(u32, u32)> {
    let (lo, hi) = match text.split_once(':') {
        Some((lo, hi)) => (lo.trim().parse()?, hi.trim().parse()?),
        None => {
            let v = text.trim().parse()?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {text}");
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), (3, 3));
        assert_eq!(parse_range("2:5").unwrap(), (2, 5));
        assert!(parse_range("5:2").is_err());
        assert!(parse_range("x").is_err());
    }
}
