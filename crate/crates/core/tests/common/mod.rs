//! Brute-force reference implementations, written without reference to
//! the library's algorithms.

#![allow(dead_code)]

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every sequence with `1 <= t_i <= i`.
pub fn triangular_codes(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|c| {
                (1..=i).map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    out
}

/// Reals whose relative order is the permutation `perm`.
pub fn reals_of(perm: &[usize]) -> Vec<f64> {
    let n = perm.len() as f64;
    perm.iter().map(|&k| (k as f64 + 0.5) / n).collect()
}

/// `t_i = 1 + #{k < i : x_k < x_i}`.
pub fn codes(x: &[f64]) -> Vec<usize> {
    (0..x.len())
        .map(|i| 1 + (0..i).filter(|&k| x[k] < x[i]).count())
        .collect()
}

/// `k_i = #{s : x_s < x_i}`.
pub fn ranks(x: &[f64]) -> Vec<usize> {
    x.iter()
        .map(|&xi| x.iter().filter(|&&xs| xs < xi).count())
        .collect()
}

/// Special positions `x_i <= x_1` and their running counts.
pub fn special(x: &[f64]) -> (Vec<bool>, Vec<usize>) {
    let mask: Vec<bool> = x.iter().map(|&v| v <= x[0]).collect();
    let d = mask
        .iter()
        .scan(0, |acc, &m| {
            *acc += m as usize;
            Some(*acc)
        })
        .collect();
    (mask, d)
}

/// Schensted insertion by linear scan; recording entries are 1-based.
pub fn rsk(word: &[f64]) -> (Vec<Vec<f64>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<f64>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let mut carry = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&v| v > carry) {
                Some(col) => {
                    std::mem::swap(&mut p[row][col], &mut carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Delete the entry 1, slide the hole out by jeu de taquin, subtract one
/// from every remaining entry.
pub fn jdt_promotion(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut t: Vec<Vec<Option<usize>>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Some(v)).collect())
        .collect();
    let (mut r, mut c) = (0usize, 0usize);
    assert_eq!(t[0][0], Some(1));
    t[0][0] = None;
    loop {
        let right = t[r].get(c + 1).copied().flatten();
        let below = t.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
        let (nr, nc) = match (right, below) {
            (None, None) => break,
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (Some(a), Some(b)) => {
                if a < b {
                    (r, c + 1)
                } else {
                    (r + 1, c)
                }
            }
        };
        t[r][c] = t[nr][nc];
        t[nr][nc] = None;
        r = nr;
        c = nc;
    }
    t.into_iter()
        .map(|row| row.into_iter().flatten().map(|v| v - 1).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect()
}

/// Standard tableaux with `n` cells: grow every tableau of size `n - 1`
/// at each outer corner.
pub fn standard_tableaux(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut level: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for m in 1..=n {
        let mut next = Vec::new();
        for t in &level {
            for r in 0..=t.len() {
                let len = t.get(r).map_or(0, Vec::len);
                let fits = r == 0 || t[r - 1].len() > len;
                if fits {
                    let mut u = t.clone();
                    if r == u.len() {
                        u.push(Vec::new());
                    }
                    u[r].push(m);
                    next.push(u);
                }
            }
        }
        level = next;
    }
    level
}

/// Shapes along the growth of a standard tableau, from empty upwards.
pub fn growth_shapes(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n: usize = rows.iter().map(Vec::len).sum();
    (0..=n)
        .map(|m| {
            rows.iter()
                .map(|r| r.iter().filter(|&&v| v <= m).count())
                .filter(|&len| len > 0)
                .collect()
        })
        .collect()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
