//! Rank over `GF(p)` for 31-bit primes.
//!
//! The rank of an integer matrix modulo `p` never exceeds its rank over the
//! rationals, since a minor that is nonzero mod `p` is a nonzero integer.
//! Agreement of several independent primes makes a strong screen, but only
//! exact elimination is treated as proof.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Rational;

/// Seed for the screening primes; fixed so runs are reproducible.
pub const SCREEN_SEED: u64 = 0x5359_5a59_4759;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These bases are a deterministic test for all n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// `count` distinct random primes in `(2^30, 2^31)` that divide none of `avoid`.
pub fn screening_primes(count: usize, seed: u64, avoid: &[BigInt]) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let cand = rng.gen_range((1u64 << 30) + 1..(1u64 << 31)) | 1;
        if out.contains(&cand) || !is_prime(cand) {
            continue;
        }
        let big = BigInt::from(cand);
        if avoid.iter().any(|a| !a.is_zero() && a.is_multiple_of(&big)) {
            continue;
        }
        out.push(cand);
    }
    out
}

pub fn reduce(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// `q mod p`; the caller guarantees `p` does not divide the denominator.
pub fn reduce_rational(q: &Rational, p: u64) -> u64 {
    let n = reduce(q.numer(), p);
    let d = reduce(q.denom(), p);
    mul_mod(n, inv_mod(d, p), p)
}

/// Rank of a matrix over `GF(p)` given by reduced rows.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pi) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, pi);
        let inv = inv_mod(rows[rank][col], p);
        for v in rows[rank][col..].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            let a = r[col];
            if a == 0 {
                continue;
            }
            let na = p - a;
            for (t, s) in r[col..].iter_mut().zip(&prow[col..]) {
                if *s != 0 {
                    *t = ((*t as u128 + na as u128 * *s as u128) % p as u128) as u64;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank modulo `p` of an integer matrix.
pub fn integer_rank_mod_p(rows: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let reduced = rows.iter().map(|r| r.iter().map(|v| reduce(v, p)).collect()).collect();
    rank_mod_p(reduced, cols, p)
}

/// Ranks of `rows` modulo each of the given primes.
pub fn screen_ranks(rows: &[Vec<BigInt>], cols: usize, primes: &[u64]) -> Vec<usize> {
    primes.iter().map(|&p| integer_rank_mod_p(rows, cols, p)).collect()
}

/// Screening ranks of a rational matrix with three primes avoiding all
/// denominators.
pub fn rational_screen(m: &super::RationalMatrix) -> (Vec<u64>, Vec<usize>) {
    let mut dens: Vec<BigInt> = Vec::new();
    for r in 0..m.rows() {
        for q in m.row(r) {
            if !q.denom().is_zero() && *q.denom() != BigInt::from(1) {
                dens.push(q.denom().clone());
            }
        }
    }
    let primes = screening_primes(3, SCREEN_SEED, &dens);
    let ranks = primes
        .iter()
        .map(|&p| {
            let rows = (0..m.rows()).map(|r| m.row(r).iter().map(|q| reduce_rational(q, p)).collect()).collect();
            rank_mod_p(rows, m.cols(), p)
        })
        .collect();
    (primes, ranks)
}
