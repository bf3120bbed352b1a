use super::{is_prime, ArithError, Residue};

/// Square root modulo an odd prime by Tonelli-Shanks. Returns the root in
/// `[0, (p-1)/2]`.
pub fn sqrt_mod_prime(a: Residue) -> Result<Residue, ArithError> {
    let p = a.modulus();
    if a.is_zero() {
        return Ok(a);
    }
    let one = Residue::one(p);
    let half = (p - 1) / 2;
    if a.pow(half) != one {
        return Err(ArithError::NonResidue { value: a.value(), p });
    }
    // p - 1 = q 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = Residue::new(2, p);
    while z.pow(half) == one {
        z = z + one;
    }
    let mut m = s;
    let mut c = z.pow(q);
    let mut t = a.pow(q);
    let mut r = a.pow((q + 1) / 2);
    while t != one {
        let mut i = 0;
        let mut t2 = t;
        while t2 != one {
            t2 = t2 * t2;
            i += 1;
        }
        let b = c.pow(1 << (m - i - 1));
        m = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    if r.value() > half {
        r = -r;
    }
    Ok(r)
}

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Writes a prime `p = 1 mod 4` as `a^2 + 4 b^2` with `a` odd and `a, b > 0`,
/// via Cornacchia's algorithm for `x^2 + y^2 = p`.
pub fn represent_a2_plus_4b2(p: u64) -> Result<(u64, u64), ArithError> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(ArithError::WrongResidueClass { p });
    }
    let root = sqrt_mod_prime(Residue::from_i64(-1, p))?;
    let (mut r0, mut r1) = (p, root.value());
    let bound = isqrt(p);
    while r1 > bound {
        (r0, r1) = (r1, r0 % r1);
    }
    let x = r1;
    let y = isqrt(p - x * x);
    debug_assert_eq!(x * x + y * y, p);
    let (a, even) = if x % 2 == 1 { (x, y) } else { (y, x) };
    Ok((a, even / 2))
}
