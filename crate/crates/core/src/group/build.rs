use super::perm::{self, Perm};
use super::{direct_product, relabel, GroupSpec, GroupTable};
use crate::error::{Error, Limits, Result};
use crate::numtheory::pow_mod;
use std::collections::{HashMap, VecDeque};

/// Builds the Cayley table of `spec`.
///
/// Index schemes: cyclic `i ↦ aⁱ`; the metacyclic families encode
/// `aⁱ bᵉ ↦ i·k + e` where `k` is the number of `b`-exponents; symmetric,
/// alternating and permutation-generated groups list permutations in
/// lexicographic order; products use the mixed-radix encoding of
/// [`direct_product`].
pub fn build_group(spec: &GroupSpec, limits: &Limits) -> Result<GroupTable> {
    spec.validate()?;
    if let Some(order) = spec.order() {
        if order > limits.max_order {
            return Err(Error::OrderCapExceeded {
                order,
                cap: limits.max_order,
            });
        }
    } else if !matches!(spec, GroupSpec::PermGenerated { .. }) {
        return Err(Error::OrderCapExceeded {
            order: usize::MAX,
            cap: limits.max_order,
        });
    }
    let name = spec.to_string();
    let g = match *spec {
        GroupSpec::Cyclic(n) => metacyclic(n, 1, 1, 0, name),
        GroupSpec::Dihedral(order) => {
            let m = order / 2;
            metacyclic(m, 2, m - 1, 0, name)
        }
        GroupSpec::Dicyclic(k) => {
            let m = 2 * k;
            metacyclic(m, 2, m - 1, k, name)
        }
        GroupSpec::ModularMaxCyclic { p, n } => {
            let m = p.pow(n - 1);
            let q = p.pow(n - 2);
            // b a b⁻¹ = a^s with s = (1 + q)⁻¹, the inverse of the y-action.
            let s = pow_mod(1 + q, (p - 1) as u64, m);
            metacyclic(m, p, s, 0, name)
        }
        GroupSpec::Semidihedral(order) => {
            let m = order / 2;
            metacyclic(m, 2, m / 2 - 1, 0, name)
        }
        GroupSpec::Zm { m, n, r } => metacyclic(m, n, r % m, 0, name),
        GroupSpec::Symmetric(n) => from_perms(perm::all_lex(n), name),
        GroupSpec::Alternating(n) => from_perms(
            perm::all_lex(n)
                .into_iter()
                .filter(|p| perm::is_even(p))
                .collect(),
            name,
        ),
        GroupSpec::PermGenerated { degree, ref gens } => {
            from_perms(close_perms(degree, gens, limits)?, name)
        }
        GroupSpec::DirectProduct(ref factors) => {
            let tables = factors
                .iter()
                .map(|f| build_group(f, limits))
                .collect::<Result<Vec<_>>>()?;
            let mut acc = tables[0].clone();
            for t in &tables[1..] {
                acc = direct_product(&acc, t, limits)?;
            }
            let labels = flat_product_labels(&tables);
            relabel(acc, labels, name)
        }
    };
    Ok(g)
}

/// `⟨a, b | aᵐ = 1, bⁿ = aᵗ, b a b⁻¹ = aˢ⟩` on words `aⁱ bᵉ`.
fn metacyclic(m: usize, n: usize, s: usize, t: usize, spec: String) -> GroupTable {
    let order = m * n;
    let s_pow: Vec<usize> = (0..n).map(|e| pow_mod(s, e as u64, m)).collect();
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, e) = (x / n, x % n);
        for y in 0..order {
            let (j, f) = (y / n, y % n);
            let mut a = i + j * s_pow[e];
            let mut b = e + f;
            if b >= n {
                b -= n;
                a += t;
            }
            mul.push(((a % m) * n + b) as u32);
        }
    }
    let labels = (0..order)
        .map(|x| word_label(x / n, x % n, n > 1))
        .collect();
    GroupTable::from_flat(order, mul, labels, spec)
}

fn word_label(i: usize, e: usize, two_gens: bool) -> String {
    let power = |g: &str, k: usize| match k {
        0 => String::new(),
        1 => g.to_string(),
        _ => format!("{g}^{k}"),
    };
    let mut s = power("a", i);
    if two_gens && e > 0 {
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&power("b", e));
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

fn from_perms(perms: Vec<Perm>, spec: String) -> GroupTable {
    let n = perms.len();
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut mul = Vec::with_capacity(n * n);
    for p in &perms {
        for q in &perms {
            mul.push(index[perm::compose(p, q).as_slice()] as u32);
        }
    }
    let labels = perms.iter().map(|p| perm::to_cycles(p)).collect();
    GroupTable::from_flat(n, mul, labels, spec)
}

/// Closes the generators under composition, sorted lexicographically so the
/// identity lands at index 0.
fn close_perms(degree: usize, gens: &[Perm], limits: &Limits) -> Result<Vec<Perm>> {
    let id = perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::from([(id.clone(), ())]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = perm::compose(&p, g);
            if !seen.contains_key(&q) {
                if seen.len() >= limits.max_order {
                    return Err(Error::OrderCapExceeded {
                        order: seen.len() + 1,
                        cap: limits.max_order,
                    });
                }
                seen.insert(q.clone(), ());
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_keys().collect();
    out.sort();
    Ok(out)
}

fn flat_product_labels(tables: &[GroupTable]) -> Vec<String> {
    let order: usize = tables.iter().map(GroupTable::order).product();
    (0..order)
        .map(|mut x| {
            let mut parts = vec![""; tables.len()];
            for (k, t) in tables.iter().enumerate().rev() {
                parts[k] = t.label(x % t.order());
                x /= t.order();
            }
            format!("({})", parts.join(","))
        })
        .collect()
}
