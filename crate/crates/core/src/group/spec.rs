use super::perm::{self, Perm};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_power_of, is_prime, pow_mod};
use std::fmt;
use std::str::FromStr;

/// A construction recipe for a finite group.
///
/// Textual form: `C<n>`, `D<order>`, `Q<order>`, `Dic<k>`, `M<p>^<n>`,
/// `SD<order>`, `S<n>`, `A<n>`, `ZM(<m>,<n>,<r>)`, `perm:<degree>:<cycles>;...`,
/// with `x` between factors of a direct product (`C2xC2xM3^3`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order (always the order, never the polygon size).
    Dihedral(usize),
    /// Dicyclic group of order `4k`; generalized quaternion when `k` is a power of two.
    Dicyclic(usize),
    /// `M(pⁿ) = ⟨x, y | x^{p^{n-1}} = yᵖ = 1, x^y = x^{p^{n-2}+1}⟩`.
    ModularMaxCyclic {
        p: usize,
        n: u32,
    },
    /// Semidihedral group of the given order `2ⁿ`, `n ≥ 4`.
    Semidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// `⟨a, b | aᵐ = bⁿ = 1, b a b⁻¹ = aʳ⟩`.
    Zm {
        m: usize,
        n: usize,
        r: usize,
    },
    DirectProduct(Vec<GroupSpec>),
    PermGenerated {
        degree: usize,
        gens: Vec<Perm>,
    },
}

impl GroupSpec {
    pub fn quaternion(order: usize) -> Self {
        GroupSpec::Dicyclic(order / 4)
    }

    pub fn product(factors: impl IntoIterator<Item = GroupSpec>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupSpec::DirectProduct(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(flat)
        }
    }

    /// Group order, if it can be computed without building the group.
    /// `None` for permutation-generated groups and on overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n),
            GroupSpec::Dihedral(m) | GroupSpec::Semidihedral(m) => Some(m),
            GroupSpec::Dicyclic(k) => k.checked_mul(4),
            GroupSpec::ModularMaxCyclic { p, n } => p.checked_pow(n),
            GroupSpec::Symmetric(n) => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            GroupSpec::Alternating(n) => {
                let f = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))?;
                Some(if n >= 2 { f / 2 } else { f })
            }
            GroupSpec::Zm { m, n, .. } => m.checked_mul(n),
            GroupSpec::DirectProduct(ref fs) => fs
                .iter()
                .try_fold(1usize, |acc, f| acc.checked_mul(f.order()?)),
            GroupSpec::PermGenerated { .. } => None,
        }
    }

    /// Checks the parameter constraints of each family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::SpecInvalid(msg));
        match self {
            GroupSpec::Cyclic(n) if *n == 0 => bad("C0: cyclic order must be positive".into()),
            GroupSpec::Dihedral(m) if *m < 4 || m % 2 != 0 => {
                bad(format!("D{m}: dihedral order must be even and at least 4"))
            }
            GroupSpec::Dicyclic(k) if *k < 2 => bad(format!("Dic{k}: requires k >= 2")),
            GroupSpec::ModularMaxCyclic { p, n } => {
                if !is_prime(*p) {
                    bad(format!("M{p}^{n}: {p} is not prime"))
                } else if (*p == 2 && *n < 4) || (*p != 2 && *n < 3) {
                    bad(format!(
                        "M{p}^{n}: requires n >= 3 for odd p and n >= 4 for p = 2"
                    ))
                } else {
                    Ok(())
                }
            }
            GroupSpec::Semidihedral(m) => match is_power_of(*m, 2) {
                Some(e) if e >= 4 => Ok(()),
                _ => bad(format!("SD{m}: order must be 2^n with n >= 4")),
            },
            GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => {
                bad("S0/A0: degree must be positive".into())
            }
            GroupSpec::Zm { m, n, r } => {
                if *m == 0 || *n == 0 {
                    return bad(format!("ZM({m},{n},{r}): m and n must be positive"));
                }
                let r_minus_1 = (r % m + m - 1) % m;
                if gcd(*m, n * r_minus_1) != 1 {
                    bad(format!("ZM({m},{n},{r}): gcd(m, n(r-1)) must be 1"))
                } else if pow_mod(*r, *n as u64, *m) != 1 % m {
                    bad(format!("ZM({m},{n},{r}): r^n must be 1 mod m"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::DirectProduct(fs) => {
                if fs.len() < 2 {
                    return bad("direct product needs at least two factors".into());
                }
                fs.iter().try_for_each(GroupSpec::validate)
            }
            GroupSpec::PermGenerated { degree, gens } => {
                if *degree == 0 {
                    return bad("perm: degree must be positive".into());
                }
                for g in gens {
                    if g.len() != *degree || !perm::is_perm(g) {
                        return bad(format!("perm: generator {g:?} is not a permutation"));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(m) => write!(f, "D{m}"),
            GroupSpec::Dicyclic(k) if k.is_power_of_two() => write!(f, "Q{}", 4 * k),
            GroupSpec::Dicyclic(k) => write!(f, "Dic{k}"),
            GroupSpec::ModularMaxCyclic { p, n } => write!(f, "M{p}^{n}"),
            GroupSpec::Semidihedral(m) => write!(f, "SD{m}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Zm { m, n, r } => write!(f, "ZM({m},{n},{r})"),
            GroupSpec::DirectProduct(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::PermGenerated { degree, gens } => {
                write!(f, "perm:{degree}:")?;
                let cycles: Vec<_> = gens.iter().map(|g| perm::to_cycles(g)).collect();
                f.write_str(&cycles.join(";"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::SpecParse {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let factors = split_top_level(s.trim()).ok_or_else(|| err("unbalanced parentheses"))?;
        let parsed = factors
            .iter()
            .map(|f| parse_atom(f.trim()).map_err(|r| err(&r)))
            .collect::<Result<Vec<_>>>()?;
        let spec = GroupSpec::product(parsed);
        spec.validate()?;
        Ok(spec)
    }
}

/// Splits on `x` outside parentheses. `perm:` atoms never contain `x`.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            'x' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

fn num(t: &str) -> std::result::Result<usize, String> {
    t.trim()
        .parse()
        .map_err(|_| format!("expected a number, found `{t}`"))
}

fn parse_atom(a: &str) -> std::result::Result<GroupSpec, String> {
    if a.is_empty() {
        return Err("empty factor".into());
    }
    if let Some(rest) = a.strip_prefix("perm:") {
        let (deg, gens) = rest
            .split_once(':')
            .ok_or("expected perm:<degree>:<cycles>;<cycles>")?;
        let degree = num(deg)?;
        let gens = if gens.trim().is_empty() {
            Vec::new()
        } else {
            gens.split(';')
                .map(|g| perm::parse_cycles(g, degree))
                .collect::<std::result::Result<Vec<_>, _>>()?
        };
        return Ok(GroupSpec::PermGenerated { degree, gens });
    }
    if let Some(rest) = a.strip_prefix("ZM(") {
        let body = rest.strip_suffix(')').ok_or("expected ZM(m,n,r)")?;
        let v: Vec<_> = body
            .split(',')
            .map(num)
            .collect::<std::result::Result<_, _>>()?;
        let [m, n, r] = v[..] else {
            return Err("ZM takes exactly three parameters".into());
        };
        return Ok(GroupSpec::Zm { m, n, r });
    }
    if let Some(rest) = a.strip_prefix("SD") {
        return Ok(GroupSpec::Semidihedral(num(rest)?));
    }
    if let Some(rest) = a.strip_prefix("Dic") {
        return Ok(GroupSpec::Dicyclic(num(rest)?));
    }
    if let Some(rest) = a.strip_prefix('Q') {
        let m = num(rest)?;
        return match is_power_of(m, 2) {
            Some(e) if e >= 3 => Ok(GroupSpec::quaternion(m)),
            _ => Err(format!("Q{m}: order must be a power of 2, at least 8")),
        };
    }
    if let Some(rest) = a.strip_prefix('M') {
        let (p, n) = rest.split_once('^').ok_or("expected M<p>^<n>")?;
        let n = u32::try_from(num(n)?).map_err(|_| "exponent too large")?;
        return Ok(GroupSpec::ModularMaxCyclic { p: num(p)?, n });
    }
    let (head, tail) = a.split_at(1);
    match head {
        "C" => Ok(GroupSpec::Cyclic(num(tail)?)),
        "D" => Ok(GroupSpec::Dihedral(num(tail)?)),
        "S" => Ok(GroupSpec::Symmetric(num(tail)?)),
        "A" => Ok(GroupSpec::Alternating(num(tail)?)),
        _ => Err(format!("unknown group family in `{a}`")),
    }
}
