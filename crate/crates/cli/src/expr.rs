//! Module expressions such as `Delta(2)` or `L(0)`.

use std::fmt;
use std::str::FromStr;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Simple,
    Standard,
    Costandard,
    Projective,
    Injective,
    Tilting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleExpr {
    pub kind: Kind,
    pub weight: String,
}

impl FromStr for ModuleExpr {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Input(format!("bad module expression {s:?}: expected L|Delta|Nabla|P|I|T(weight)"));
        let (head, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let weight = rest.strip_suffix(')').ok_or_else(bad)?.trim();
        let kind = match head.trim() {
            "L" => Kind::Simple,
            "Delta" | "Δ" => Kind::Standard,
            "Nabla" | "∇" => Kind::Costandard,
            "P" => Kind::Projective,
            "I" => Kind::Injective,
            "T" => Kind::Tilting,
            _ => return Err(bad()),
        };
        if weight.is_empty() {
            return Err(bad());
        }
        Ok(ModuleExpr { kind, weight: weight.to_string() })
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.kind {
            Kind::Simple => "L",
            Kind::Standard => "Delta",
            Kind::Costandard => "Nabla",
            Kind::Projective => "P",
            Kind::Injective => "I",
            Kind::Tilting => "T",
        };
        write!(f, "{head}({})", self.weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let e: ModuleExpr = "Delta(0)".parse().unwrap();
        assert_eq!(e.kind, Kind::Standard);
        assert_eq!(e.to_string(), "Delta(0)");
        assert_eq!("∇(3)".parse::<ModuleExpr>().unwrap().kind, Kind::Costandard);
        assert!("Q(1)".parse::<ModuleExpr>().is_err());
        assert!("L()".parse::<ModuleExpr>().is_err());
        assert!("L(1".parse::<ModuleExpr>().is_err());
    }
}
