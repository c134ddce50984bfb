//! Group spec files.
//!
//! ```text
//! # explicit generators
//! degree 4
//! (1 2 3 4)
//! (1 2)
//! ```
//!
//! ```text
//! family wreath a=dihedral:order=8 k=2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Family parameters
//! that are themselves groups use `name:key=value:key=value`.

use crate::constructors as c;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Explicit { degree: usize, generators: Vec<Permutation> },
    Family { name: String, params: Vec<(String, String)> },
}

const FAMILIES: &[(&str, &[&str])] = &[
    ("cyclic", &["n"]),
    ("dihedral", &["order"]),
    ("symmetric", &["n"]),
    ("alternating", &["n"]),
    ("direct", &["a", "b"]),
    ("wreath", &["a", "k"]),
    ("central_product", &[]),
    ("extraspecial2", &["m", "sign"]),
    ("metacyclic", &["m", "n", "r"]),
    ("out_group", &["d", "f", "p"]),
    ("agl", &["d", "q"]),
    ("asl", &["d", "q"]),
    ("agammal1", &["q"]),
    ("asl1_squares", &["q"]),
    ("gl", &["d", "q"]),
    ("sl", &["d", "q"]),
    ("psl", &["d", "q"]),
    ("pgl", &["d", "q"]),
    ("pgammal", &["d", "q"]),
    ("holomorph", &["kind", "n"]),
    ("data_file", &["name", "action"]),
    ("aut_psl3", &["q", "part"]),
];

/// Parameters that may be omitted.
const OPTIONAL: &[(&str, &str)] = &[("holomorph", "n"), ("data_file", "action"), ("aut_psl3", "part")];

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (ln, first) = lines.next().ok_or_else(|| parse_err(1, 1, "empty spec"))?;
        let indent = first.len() - first.trim_start().len();
        let mut words = first.split_whitespace();
        match words.next() {
            Some("degree") => {
                let rest: Vec<&str> = words.collect();
                let [n] = rest.as_slice() else {
                    return Err(parse_err(ln, indent + 1, "expected `degree <n>`"));
                };
                let degree: usize = n.parse().map_err(|_| parse_err(ln, indent + 8, format!("bad degree {n:?}")))?;
                if degree == 0 {
                    return Err(parse_err(ln, indent + 8, "degree must be positive"));
                }
                let mut generators = Vec::new();
                for (ln, line) in lines {
                    generators.push(crate::perm::parse_cycles_at(line, degree, ln, 1).map_err(|e| locate(e, line, ln))?);
                }
                Ok(GroupSpec::Explicit { degree, generators })
            }
            Some("family") => {
                let Some(name) = words.next() else {
                    return Err(parse_err(ln, indent + 7, "missing family name"));
                };
                let params: Vec<(String, String)> = words
                    .map(|w| {
                        let col = first.find(w).unwrap_or(0) + 1;
                        w.split_once('=')
                            .map(|(k, v)| (k.to_string(), v.to_string()))
                            .ok_or_else(|| parse_err(ln, col, format!("expected key=value, found {w:?}")))
                    })
                    .collect::<Result<_>>()?;
                let col = first.find(name).unwrap_or(0) + 1;
                validate(name, &params).map_err(|m| parse_err(ln, col, m))?;
                if let Some((extra_ln, _)) = lines.next() {
                    return Err(parse_err(extra_ln, 1, "family specs are a single line"));
                }
                Ok(GroupSpec::Family { name: name.to_string(), params })
            }
            _ => Err(parse_err(ln, indent + 1, "expected `degree` or `family`")),
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Explicit { degree, generators } => PermGroup::new(*degree, generators.clone()),
            GroupSpec::Family { name, params } => build_family(name, params),
        }
    }
}

/// Gives point errors the position of the offending point.
fn locate(e: Error, line: &str, ln: usize) -> Error {
    let (point, message) = match &e {
        Error::PointOutOfRange { point, degree } => (*point, format!("point {point} is outside 1..={degree}")),
        Error::RepeatedPoint(point) => (*point, format!("point {point} is repeated")),
        _ => return e,
    };
    let token = point.to_string();
    let column = line
        .match_indices(&token)
        .filter(|(i, _)| {
            let before = line[..*i].chars().next_back().map_or(true, |c| !c.is_ascii_digit());
            let after = line[i + token.len()..].chars().next().map_or(true, |c| !c.is_ascii_digit());
            before && after
        })
        .map(|(i, _)| i + 1)
        .last()
        .unwrap_or(1);
    parse_err(ln, column, message)
}

fn validate(name: &str, params: &[(String, String)]) -> std::result::Result<(), String> {
    let Some((_, keys)) = FAMILIES.iter().find(|(n, _)| *n == name) else {
        return Err(format!("unknown family {name:?}"));
    };
    for (k, _) in params {
        if !keys.contains(&k.as_str()) {
            return Err(format!("family {name} has no parameter {k:?}"));
        }
        if params.iter().filter(|(k2, _)| k2 == k).count() > 1 {
            return Err(format!("parameter {k:?} given twice"));
        }
    }
    for k in keys.iter() {
        let optional = OPTIONAL.contains(&(name, k));
        if !optional && !params.iter().any(|(k2, _)| k2 == k) {
            return Err(format!("family {name} needs parameter {k:?}"));
        }
    }
    Ok(())
}

/// `name:key=value:...` used for group-valued parameters.
fn inline_spec(value: &str) -> Result<PermGroup> {
    let mut parts = value.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<(String, String)> = parts
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::InvalidParameter(format!("bad inline parameter {p:?}")))
        })
        .collect::<Result<_>>()?;
    validate(name, &params).map_err(Error::InvalidParameter)?;
    build_family(name, &params)
}

fn build_family(name: &str, params: &[(String, String)]) -> Result<PermGroup> {
    let get = |k: &str| params.iter().find(|(k2, _)| k2 == k).map(|(_, v)| v.as_str());
    let num = |k: &str| -> Result<usize> {
        let v = get(k).ok_or_else(|| Error::InvalidParameter(format!("missing {k}")))?;
        v.parse().map_err(|_| Error::InvalidParameter(format!("{k}={v} is not a number")))
    };
    match name {
        "cyclic" => c::cyclic(num("n")?),
        "dihedral" => c::dihedral(num("order")?),
        "symmetric" => c::symmetric(num("n")?),
        "alternating" => c::alternating(num("n")?),
        "direct" => c::direct_product(&inline_spec(get("a").unwrap_or_default())?, &inline_spec(get("b").unwrap_or_default())?),
        "wreath" => c::wreath_imprimitive(&inline_spec(get("a").unwrap_or_default())?, num("k")?),
        "central_product" => c::central_product_d8_q8(),
        "extraspecial2" => {
            let kind = match get("sign") {
                Some("plus" | "+") => c::ExtraspecialType::Plus,
                Some("minus" | "-") => c::ExtraspecialType::Minus,
                other => return Err(Error::InvalidParameter(format!("sign must be plus or minus, got {other:?}"))),
            };
            c::extraspecial2(num("m")?, kind)
        }
        "metacyclic" => c::metacyclic(num("m")?, num("n")?, num("r")?),
        "out_group" => c::out_group(num("d")?, num("f")?, num("p")?),
        "agl" => c::agl(num("d")?, num("q")?),
        "asl" => c::asl(num("d")?, num("q")?),
        "agammal1" => c::agammal1(num("q")?),
        "asl1_squares" => c::asl1_squares(num("q")?),
        "gl" => c::gl(num("d")?, num("q")?),
        "sl" => c::sl(num("d")?, num("q")?),
        "psl" => c::psl(num("d")?, num("q")?),
        "pgl" => c::pgl(num("d")?, num("q")?),
        "pgammal" => c::pgammal(num("d")?, num("q")?),
        "holomorph" => match get("kind") {
            Some(kind) if kind.starts_with("elementary") => {
                let (p, d) = parse_power(kind.trim_start_matches("elementary"))?;
                c::holomorph_elementary(p, d)
            }
            Some("cyclic") => c::holomorph_cyclic(num("n")?),
            other => Err(Error::InvalidParameter(format!(
                "holomorph kind must be cyclic or elementary<p>^<d>, got {other:?}"
            ))),
        },
        "data_file" => {
            let name = get("name").unwrap_or_default();
            match get("action").unwrap_or("affine") {
                "affine" => c::shipped_affine(name),
                "linear" => c::shipped_linear(name),
                other => Err(Error::InvalidParameter(format!("action must be affine or linear, got {other:?}"))),
            }
        }
        "aut_psl3" => {
            let pl = c::aut_psl3_on_points_and_lines(num("q")?)?;
            match get("part").unwrap_or("aut") {
                "aut" => Ok(pl.aut),
                "pgl" => Ok(pl.pgl),
                "socle" => Ok(pl.socle),
                other => Err(Error::InvalidParameter(format!("part must be aut, pgl or socle, got {other:?}"))),
            }
        }
        _ => Err(Error::InvalidParameter(format!("unknown family {name:?}"))),
    }
}

/// `<p>^<d>`.
fn parse_power(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("expected <p>^<d>, got {s:?}"));
    let (p, d) = s.split_once('^').ok_or_else(bad)?;
    Ok((p.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?))
}

/// Parses and builds a spec.
pub fn parse_group(text: &str) -> Result<PermGroup> {
    GroupSpec::parse(text)?.build()
}

/// `sym:<n>`.
pub fn parse_ambient(s: &str) -> Result<PermGroup> {
    let n = s
        .strip_prefix("sym:")
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidParameter(format!("ambient must be sym:<n>, got {s:?}")))?;
    c::symmetric(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit() {
        let g = parse_group("# S4\ndegree 4\n(1 2 3 4)\n\n(1 2)\n").unwrap();
        assert_eq!(g.order(), 24);
        let t = parse_group("degree 3\n").unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn explicit_errors_have_positions() {
        match GroupSpec::parse("degree 4\n(1 2 3 4)\n(1 5)\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 4)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(GroupSpec::parse("degree x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(GroupSpec::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(GroupSpec::parse("groups 4"), Err(Error::Parse { .. })));
    }

    #[test]
    fn families() {
        assert_eq!(parse_group("family dihedral order=8").unwrap().order(), 8);
        assert_eq!(parse_group("family wreath a=dihedral:order=8 k=2").unwrap().order(), 128);
        assert_eq!(parse_group("family direct a=symmetric:n=4 b=cyclic:n=2").unwrap().order(), 48);
        assert_eq!(parse_group("family holomorph kind=elementary3^2").unwrap().order(), 432);
        assert_eq!(parse_group("family holomorph kind=cyclic n=7").unwrap().order(), 42);
        assert_eq!(parse_group("family data_file name=q3_d2_q8").unwrap().order(), 72);
        assert_eq!(parse_group("family extraspecial2 m=2 sign=minus").unwrap().order(), 32);
        assert_eq!(parse_group("family psl d=2 q=9").unwrap().order(), 360);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(GroupSpec::parse("family nope n=3"), Err(Error::Parse { .. })));
        assert!(matches!(GroupSpec::parse("family cyclic"), Err(Error::Parse { .. })));
        assert!(matches!(GroupSpec::parse("family cyclic n=3 m=2"), Err(Error::Parse { .. })));
        assert!(matches!(GroupSpec::parse("family cyclic n"), Err(Error::Parse { .. })));
        assert!(parse_group("family metacyclic m=7 n=4 r=3").is_err());
        assert_eq!(parse_ambient("sym:5").unwrap().order(), 120);
        assert!(parse_ambient("alt:5").is_err());
    }
}
