//! Permutations of `0..degree` stored as image arrays.
//!
//! Products compose left to right: `p * q` applies `p` first, then `q`, so
//! conjugation `x⁻¹ h x` sends the cycle `(a b)` to `(a^x b^x)`.

pub type Perm = Vec<usize>;

pub fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

/// Apply `p`, then `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    p.iter().map(|&i| q[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        inv[pi] = i;
    }
    inv
}

pub fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// All permutations of `0..n` in lexicographic order (identity first).
pub fn all_lex(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Cycle notation with 1-based points, e.g. `(1,2)(3,4)`; identity is `()`.
pub fn to_cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        s.push('(');
        s.push_str(&cycle.join(","));
        s.push(')');
    }
    if s.is_empty() {
        s.push_str("()");
    }
    s
}

/// Parses cycle notation over points `1..=degree`. Cycles multiply left to
/// right like any other product.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, String> {
    let mut result = identity(degree);
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| format!("expected `(...)` in `{text}`"))?;
        let body = &rest[1..=body_end];
        rest = rest[body_end + 2..].trim_start();
        if body.trim().is_empty() {
            continue;
        }
        let points = body
            .split(',')
            .map(|t| {
                let v: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad point `{}`", t.trim()))?;
                if v == 0 || v > degree {
                    return Err(format!("point {v} outside 1..={degree}"));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = vec![false; degree];
        if let Some(&dup) = points
            .iter()
            .find(|&&a| std::mem::replace(&mut seen[a], true))
        {
            return Err(format!("point {} repeated in a cycle", dup + 1));
        }
        let mut cycle = identity(degree);
        for (k, &a) in points.iter().enumerate() {
            cycle[a] = points[(k + 1) % points.len()];
        }
        result = compose(&result, &cycle);
    }
    Ok(result)
}

pub fn is_perm(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}
