//! Oracles shared by the integration tests. Nothing here calls the
//! Murnaghan–Nakayama or tableau code of the library.
#![allow(dead_code)]

use hookring::partitions::{all_partitions, Partition};

pub fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

/// Number of tabloids of shape `mu` fixed by a permutation of cycle type
/// `rho`: ways to distribute the cycles over rows with row sums `mu`.
pub fn fixed_tabloids(mu: &[usize], rho: &[usize]) -> i64 {
    fn rec(cycles: &[usize], room: &mut Vec<usize>) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as i64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += rec(rest, room);
                room[i] += c;
            }
        }
        total
    }
    rec(rho, &mut mu.to_vec())
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(k - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, k - 1);
            // Inserting at `pos` creates `len - pos` inversions.
            let s = if (perm.len() - pos) % 2 == 0 { sign } else { -sign };
            out.push((q, s));
        }
    }
    out
}

/// `χ^λ(ρ) = Σ_w sgn(w) π^{λ + δ - wδ}(ρ)`, the character form of the
/// Jacobi–Trudi determinant, with `π^μ` the permutation character on
/// tabloids.
pub fn jacobi_trudi_character(lambda: &Partition, rho: &Partition) -> i64 {
    let l = lambda.len();
    let mut total = 0;
    for (w, sign) in permutations(l) {
        let mut comp = Vec::with_capacity(l);
        let mut ok = true;
        for (i, &wi) in w.iter().enumerate() {
            let v = lambda.part(i) as i64 - i as i64 + wi as i64;
            if v < 0 {
                ok = false;
                break;
            }
            comp.push(v as usize);
        }
        if ok {
            let mut mu: Vec<usize> = comp.into_iter().filter(|&x| x > 0).collect();
            mu.sort_unstable_by(|a, b| b.cmp(a));
            total += sign * fixed_tabloids(&mu, rho.parts());
        }
    }
    total
}

/// Brute-force LR coefficient: fillings of `ν/λ` with content `μ` that are
/// semistandard and whose reverse reading word is a lattice word.
pub fn lr_bruteforce(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).map(move |c| (r, c)))
        .collect();
    let letters = mu.len().max(1);
    let mut fill = vec![0usize; cells.len()];
    let mut count = 0;
    loop {
        if admissible(&cells, &fill, mu) {
            count += 1;
        }
        // Odometer over all letters^cells fillings.
        let mut i = 0;
        loop {
            if i == fill.len() {
                return count;
            }
            fill[i] += 1;
            if fill[i] < letters {
                break;
            }
            fill[i] = 0;
            i += 1;
        }
    }
}

fn admissible(cells: &[(usize, usize)], fill: &[usize], mu: &Partition) -> bool {
    let mut content = vec![0; mu.len()];
    for &x in fill {
        if x >= mu.len() {
            return false;
        }
        content[x] += 1;
    }
    if content != mu.parts() {
        return false;
    }
    let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| fill[i]);
    for (i, &(r, c)) in cells.iter().enumerate() {
        if c > 0 {
            if let Some(left) = at(r, c - 1) {
                if left > fill[i] {
                    return false;
                }
            }
        }
        if r > 0 {
            if let Some(up) = at(r - 1, c) {
                if up >= fill[i] {
                    return false;
                }
            }
        }
    }
    // Reading right to left along rows, top to bottom.
    let mut seen = vec![0; mu.len()];
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| (cells[i].0, std::cmp::Reverse(cells[i].1)));
    for i in order {
        let x = fill[i];
        seen[x] += 1;
        if x > 0 && seen[x] > seen[x - 1] {
            return false;
        }
    }
    true
}

pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(all_partitions).collect()
}
