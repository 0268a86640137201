//! Independent oracles shared by the integration tests. None of these call
//! into the generators or validators they are used to check.

#![allow(dead_code)]

use asm_tournaments::bijection::{phi, psi};
use asm_tournaments::enumeration::{enumerate_ocmt, enumerate_tournaments, BottomRow};
use asm_tournaments::{Entry, Monomial, Triangle};

/// All ASMs of order `n` as integer rows, built row by row: each row has
/// partial sums in {0,1} and total 1, and the running column sums stay in
/// {0,1} and end at 1.
pub fn asm_row_filter(n: usize) -> Vec<Vec<Vec<i64>>> {
    fn rows(n: usize) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let row: Vec<i64> = (0..n)
                .map(|_| {
                    let d = (c % 3) as i64 - 1;
                    c /= 3;
                    d
                })
                .collect();
            let mut s = 0;
            let ok = row.iter().all(|&v| {
                s += v;
                s == 0 || s == 1
            });
            if ok && s == 1 {
                out.push(row);
            }
        }
        out
    }
    fn go(n: usize, cands: &[Vec<i64>], col: &mut Vec<i64>, cur: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if cur.len() == n {
            if col.iter().all(|&c| c == 1) {
                out.push(cur.clone());
            }
            return;
        }
        for r in cands {
            let next: Vec<i64> = col.iter().zip(r).map(|(a, b)| a + b).collect();
            if next.iter().all(|&c| c == 0 || c == 1) {
                let saved = std::mem::replace(col, next);
                cur.push(r.clone());
                go(n, cands, col, cur, out);
                cur.pop();
                *col = saved;
            }
        }
    }
    let cands = rows(n);
    let mut out = Vec::new();
    go(n, &cands, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

/// Direct reading of "oriented monotone triangle": numerical rows strictly
/// increasing, every entry weakly between its lower neighbours, an entry
/// equal to its lower-left neighbour is an `x`, one equal to its
/// lower-right neighbour is a `y`.
pub fn is_oriented_monotone(t: &Triangle) -> bool {
    let n = t.n();
    let value = |e: &Entry| match *e {
        Entry::X(v) | Entry::Y(v) | Entry::Num(v) => Some(v),
        _ => None,
    };
    let mut vals: Vec<Vec<u32>> = Vec::new();
    for k in 1..=n {
        let Some(r) = t.row(k).iter().map(value).collect::<Option<Vec<u32>>>() else {
            return false;
        };
        if r.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        vals.push(r);
    }
    for k in 1..n {
        for (p, e) in t.row(k).iter().enumerate() {
            let (i, j, kk) = (vals[k][p], vals[k - 1][p], vals[k][p + 1]);
            if j < i || j > kk {
                return false;
            }
            if j == i && !matches!(e, Entry::X(_)) {
                return false;
            }
            if j == kk && !matches!(e, Entry::Y(_)) {
                return false;
            }
        }
    }
    true
}

/// Whether `t` is the triangle of some tournament: row `k` lists the pairs
/// `(p, p + n - k)` in order, each as an `a` or a `b`.
pub fn is_tournament_triangle(t: &Triangle) -> bool {
    let n = t.n();
    (1..n).all(|k| {
        t.row(k).iter().enumerate().all(|(p, e)| {
            let i = p as u32 + 1;
            let j = i + (n - k) as u32;
            matches!(*e, Entry::A(a, b) | Entry::B(a, b) if a == i && b == j)
        })
    }) && t.row(n).iter().enumerate().all(|(p, e)| *e == Entry::Num(p as u32 + 1))
}

/// Calls `f` on every triangle over `bottom` whose non-bottom entries are
/// drawn from `alphabet`.
pub fn for_each_filled(bottom: &[u32], alphabet: &[Entry], mut f: impl FnMut(Triangle)) {
    let n = bottom.len();
    let slots = n * (n - 1) / 2;
    let base = alphabet.len();
    let mut idx = vec![0usize; slots];
    loop {
        let mut it = idx.iter();
        let mut rows: Vec<Vec<Entry>> = (1..n)
            .map(|k| (0..k).map(|_| alphabet[*it.next().unwrap()]).collect())
            .collect();
        rows.push(bottom.iter().map(|&v| Entry::Num(v)).collect());
        f(Triangle::new(rows).expect("entries within range"));
        let mut pos = 0;
        loop {
            if pos == slots {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < base {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub fn x_alphabet(max: u32) -> Vec<Entry> {
    (1..=max).flat_map(|i| [Entry::X(i), Entry::Y(i)]).collect()
}

pub fn v_alphabet(max: u32) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 1..=max {
        for j in i + 1..=max {
            out.push(Entry::A(i, j));
            out.push(Entry::B(i, j));
        }
    }
    out
}

/// Edge weights multiplied one at a time: the winner `w` of the pair
/// `{i, j}` contributes `x_w` when it is the smaller vertex, else `y_w`.
pub fn edge_weight(n: usize, arcs: impl Iterator<Item = (u32, u32)>) -> Monomial {
    let mut x = vec![0u32; n];
    let mut y = vec![0u32; n];
    for (from, to) in arcs {
        if from < to {
            x[from as usize - 1] += 1;
        } else {
            y[from as usize - 1] += 1;
        }
    }
    Monomial::from_exponents(x, y, 0).unwrap()
}

/// Every triangle met along `Φ` of each oriented triangle and `Ψ` of each
/// tournament of order `n`, deduplicated.
pub fn reachable_states(n: usize) -> Vec<Triangle> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut keep = |t: &Triangle| {
        if seen.insert(t.to_string()) {
            out.push(t.clone());
        }
    };
    for o in enumerate_ocmt(&BottomRow::standard(n)).unwrap() {
        let (_, trace) = phi(&o).unwrap();
        keep(trace.initial());
        for s in trace.steps() {
            keep(&s.after);
        }
    }
    for t in enumerate_tournaments(n).unwrap() {
        let (_, trace) = psi(&t).unwrap();
        for s in trace.steps() {
            keep(&s.after);
        }
    }
    out
}

/// Strictly increasing subsets of `1..=max` of size `size`.
pub fn subsets(max: u32, size: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, max: u32, size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            go(v + 1, max, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max, size, &mut Vec::new(), &mut out);
    out
}
