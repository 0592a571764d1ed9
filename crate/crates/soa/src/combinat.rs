//! Small enumeration helpers with pinned deterministic orders.

/// All k-subsets of {0..m} in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All ordered tuples of g positive integers summing to t, lexicographic.
pub(crate) fn compositions(t: u32, g: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(g);
    fn rec(t: u32, g: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if g == 1 {
            cur.push(t);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 1..=t.saturating_sub(g as u32 - 1) {
            cur.push(first);
            rec(t - first, g - 1, cur, out);
            cur.pop();
        }
    }
    if g >= 1 && t >= g as u32 {
        rec(t, g, &mut cur, &mut out);
    }
    out
}

/// All vectors of m nonnegative integers summing to total, lexicographic.
pub(crate) fn weak_compositions(total: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(total: u32, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            rec(total - first, m - 1, cur, out);
            cur.pop();
        }
    }
    if m >= 1 {
        rec(total, m, &mut cur, &mut out);
    }
    out
}

/// Binomial coefficient as u128 (sizes here are tiny).
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
