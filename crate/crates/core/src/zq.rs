//! Residue arithmetic helpers shared by the graph and function layers.

#[inline]
pub(crate) fn add(a: u8, b: u8, q: u8) -> u8 {
    ((a as u16 + b as u16) % q as u16) as u8
}

#[inline]
pub(crate) fn neg(a: u8, q: u8) -> u8 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

#[inline]
pub(crate) fn sub(a: u8, b: u8, q: u8) -> u8 {
    add(a, neg(b, q), q)
}

#[inline]
pub(crate) fn mul(a: u8, b: u8, q: u8) -> u8 {
    ((a as u16 * b as u16) % q as u16) as u8
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Reduces an arbitrary integer into `[0, q)`.
pub(crate) fn reduce(x: i64, q: u8) -> u8 {
    x.rem_euclid(q as i64) as u8
}

/// Solves `2t = c (mod q)`, returning the smallest solution.
pub(crate) fn halve(c: u8, q: u8) -> Option<u8> {
    if !q.is_multiple_of(2) {
        Some(mul(c, (q / 2) + 1, q))
    } else if c.is_multiple_of(2) {
        Some(c / 2)
    } else {
        None
    }
}

/// Multiplicative inverse in a prime field.
pub(crate) fn inv(a: u8, q: u8) -> u8 {
    debug_assert!(a != 0);
    pow(a, q as u32 - 2, q)
}

pub(crate) fn pow(a: u8, mut e: u32, q: u8) -> u8 {
    let mut base = a % q;
    let mut acc = 1 % q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, q);
        }
        base = mul(base, base, q);
        e >>= 1;
    }
    acc
}
