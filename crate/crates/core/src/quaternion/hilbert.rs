use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// A place of ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Place {
    Prime(u64),
    Infinity,
}

/// v_p(n) and the p-free part of n (n ≠ 0).
fn split_valuation(mut n: i128, p: i128) -> (u32, i128) {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol (u | p) for an odd prime p.
pub fn legendre(u: i128, p: u64) -> i8 {
    let p128 = p as i128;
    let r = u.rem_euclid(p128) as u128;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p as u128 - 1) / 2, p as u128) == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (D_K | p) for a prime p.
pub fn kronecker(dk: i64, p: u64) -> i8 {
    if p == 2 {
        if dk % 2 == 0 {
            0
        } else if dk.rem_euclid(8) == 1 {
            1
        } else {
            -1
        }
    } else {
        legendre(dk as i128, p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of n ≠ 0.
pub fn prime_divisors(n: i128) -> BTreeSet<u64> {
    let mut n = n.unsigned_abs();
    let mut out = BTreeSet::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.insert(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n as u64);
    }
    out
}

/// The Hilbert symbol (a, b)_v, by the closed formulas (ε/ω characters at 2).
pub fn hilbert_symbol(a: i64, b: i64, place: Place) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(a as i128, 2);
            let (beta, v) = split_valuation(b as i128, 2);
            let eps = |x: i128| ((x - 1) / 2).rem_euclid(2) as u32;
            let omega = |x: i128| ((x * x - 1) / 8).rem_euclid(2) as u32;
            let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(a as i128, p as i128);
            let (beta, v) = split_valuation(b as i128, p as i128);
            let mut s: i8 = if (alpha * beta) % 2 == 1 && (p - 1) / 2 % 2 == 1 { -1 } else { 1 };
            if beta % 2 == 1 {
                s *= legendre(u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(v, p);
            }
            s
        }
    }
}

fn squarefree_part(n: i64) -> i64 {
    crate::exactnum::squarefree_decompose(n).1
}

/// The Hilbert symbol by exhaustive search: z² = ax² + by² is searched for a
/// primitive solution modulo p³ (2⁶ at p = 2), after reducing a and b to
/// their squarefree parts. With squarefree coefficients such a solution
/// lifts to ℚ_p by Hensel's lemma.
pub fn hilbert_symbol_by_search(a: i64, b: i64, place: Place) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    let p = match place {
        Place::Infinity => return if a < 0 && b < 0 { -1 } else { 1 },
        Place::Prime(p) => p as i128,
    };
    let (a, b) = (squarefree_part(a) as i128, squarefree_part(b) as i128);
    let m = if p == 2 { 64 } else { p * p * p };
    let mut squares = vec![false; m as usize];
    for z in 0..m {
        squares[(z * z % m) as usize] = true;
    }
    let is_square = |t: i128| squares[t.rem_euclid(m) as usize];
    // primitive (x, y) up to scaling: x = 1, or p | x and y = 1
    let found = (0..m).any(|y| is_square(a + b * y * y))
        || (0..m / p).any(|k| is_square(a * (p * k) * (p * k) + b));
    if found {
        1
    } else {
        -1
    }
}

/// Hasse invariant Π_{i<j} (a_i, a_j)_v of the diagonal form ⟨a_1, …, a_n⟩.
pub fn hasse_invariant(diag: &[i64], place: Place) -> i8 {
    let mut s = 1;
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            s *= hilbert_symbol(diag[i], diag[j], place);
        }
    }
    s
}

/// Rational equivalence of two nondegenerate diagonal forms of the same rank:
/// equal discriminants mod squares, equal signatures and equal Hasse invariants.
pub fn diagonal_forms_equivalent(f: &[i64], g: &[i64]) -> bool {
    if f.len() != g.len() {
        return false;
    }
    let disc = |d: &[i64]| d.iter().fold(1i64, |acc, &x| squarefree_part(acc * squarefree_part(x)));
    if disc(f) != disc(g) {
        return false;
    }
    let negatives = |d: &[i64]| d.iter().filter(|&&x| x < 0).count();
    if negatives(f) != negatives(g) {
        return false;
    }
    let mut primes = BTreeSet::from([2u64]);
    for &x in f.iter().chain(g) {
        primes.extend(prime_divisors(x as i128));
    }
    primes
        .into_iter()
        .all(|p| hasse_invariant(f, Place::Prime(p)) == hasse_invariant(g, Place::Prime(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_search() {
        let primes: Vec<u64> = (2..=30).filter(|&n| is_prime(n)).collect();
        for a in (-30..=30).filter(|&x| x != 0) {
            for b in (-30..=30).filter(|&x| x != 0) {
                for &p in &primes {
                    let place = Place::Prime(p);
                    assert_eq!(
                        hilbert_symbol(a, b, place),
                        hilbert_symbol_by_search(a, b, place),
                        "({a},{b})_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn basic_values() {
        for p in [2, 3, 5, 7] {
            assert_eq!(hilbert_symbol(1, -7, Place::Prime(p)), 1);
        }
        assert_eq!(hilbert_symbol(-1, -1, Place::Infinity), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Prime(2)), -1);
        assert_eq!(hilbert_symbol(3, -1, Place::Prime(3)), -1);
        assert_eq!(hilbert_symbol_by_search(3, -1, Place::Prime(3)), -1);
        assert_eq!(hilbert_symbol(5, -2, Place::Prime(5)), -1);
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-3, 3), 0);
    }

    #[test]
    fn form_equivalence() {
        assert!(diagonal_forms_equivalent(&[1, 1, 1], &[1, 2, 2]));
        assert!(!diagonal_forms_equivalent(&[1, 1, 1], &[1, 1, -1]));
        assert!(!diagonal_forms_equivalent(&[1, 1], &[1, 2]));
    }
}
