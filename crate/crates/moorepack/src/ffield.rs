//! Dense arithmetic tables for the finite field GF(q), q = p^k ≤ 2^16.
//!
//! Field elements are plain indices `0..q` of type [`FieldElement`]. The
//! element with index `e` represents the polynomial `Σ cᵢ xⁱ` where
//! `(c₀, c₁, …)` are the base-p digits of `e`, taken modulo a fixed monic
//! irreducible polynomial of degree k. Index 0 is the additive identity and
//! index 1 the multiplicative identity under this encoding, for every q.
//!
//! The modulus is the lexicographically least monic irreducible of degree k,
//! comparing coefficient tuples from the most significant non-leading
//! coefficient down. This pins down the table contents completely:
//! `make_field(q)` is deterministic, so vertex labels of the generated
//! incidence graphs are stable across runs and platforms. For GF(4) the
//! modulus is x² + x + 1; for GF(8) it is x³ + x + 1; for GF(9) it is x² + 1.

use thiserror::Error;

/// Index into a [`FieldTable`]; only values `< q` are meaningful.
pub type FieldElement = u16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("q = {0} is not a prime power in the supported range 2..=65536")]
    NotPrimePower(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: u32,
    p: u32,
    k: u32,
    add: Vec<FieldElement>,
    mul: Vec<FieldElement>,
    neg: Vec<FieldElement>,
    inv: Vec<FieldElement>,
    /// Non-leading coefficients (c₀, …, c_{k−1}) of the modulus; empty for prime q.
    modulus: Vec<u16>,
}

impl FieldTable {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    /// Non-leading coefficients (constant term first) of the modulus
    /// polynomial; empty when q is prime.
    pub fn modulus_coefficients(&self) -> &[u16] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q as FieldElement
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse. Panics on 0; callers guard.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// a² as a convenience for the quadratic incidence rules.
    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// True when a = b² for some b (0 counts as a square).
    pub fn is_square(&self, a: FieldElement) -> bool {
        self.elements().any(|b| self.square(b) == a)
    }

    /// The least element that is not a square of anything. In odd
    /// characteristic exactly (q−1)/2 non-squares exist; in characteristic 2
    /// squaring is a bijection, so there is none and `None` is returned.
    pub fn least_non_square(&self) -> Option<FieldElement> {
        self.elements().find(|&a| !self.is_square(a))
    }
}

/// Evaluate the quadratic incidence pair `(a·w + b, a²·w + 2ab + c)`.
///
/// This is the coordinate form shared by the generalized-quadrangle
/// incidence rules; `2ab` means `ab + ab`, which vanishes in
/// characteristic 2.
pub fn field_eval_quad(
    tbl: &FieldTable,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    w: FieldElement,
) -> (FieldElement, FieldElement) {
    let first = tbl.add(tbl.mul(a, w), b);
    let ab = tbl.mul(a, b);
    let second = tbl.add(tbl.add(tbl.mul(tbl.square(a), w), tbl.add(ab, ab)), c);
    (first, second)
}

/// Decompose q as p^k with p prime; `None` if q is not a prime power ≥ 2.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1)); // prime
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Some((p, k))
    } else {
        None
    }
}

pub fn make_field(q: u64) -> Result<FieldTable, FieldError> {
    let (p64, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
    if q > 1 << 16 {
        return Err(FieldError::NotPrimePower(q));
    }
    let q = q as u32;
    let p = p64 as u32;

    let modulus = if k == 1 {
        Vec::new()
    } else {
        least_irreducible(p, k)
    };

    let qs = q as usize;
    let mut add = vec![0 as FieldElement; qs * qs];
    let mut mul = vec![0 as FieldElement; qs * qs];
    let mut neg = vec![0 as FieldElement; qs];
    let mut inv = vec![0 as FieldElement; qs];

    for a in 0..qs {
        for b in 0..=a {
            let s = add_index(a as u32, b as u32, p, k);
            add[a * qs + b] = s as FieldElement;
            add[b * qs + a] = s as FieldElement;
            let m = mul_index(a as u32, b as u32, p, k, &modulus);
            mul[a * qs + b] = m as FieldElement;
            mul[b * qs + a] = m as FieldElement;
            if s == 0 {
                neg[a] = b as FieldElement;
                neg[b] = a as FieldElement;
            }
            if m == 1 {
                inv[a] = b as FieldElement;
                inv[b] = a as FieldElement;
            }
        }
    }

    Ok(FieldTable {
        q,
        p,
        k,
        add,
        mul,
        neg,
        inv,
        modulus,
    })
}

/// Digit-wise addition of the base-p encodings.
fn add_index(a: u32, b: u32, p: u32, k: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..k {
        out += ((a + b) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Polynomial product of the encodings, reduced modulo the field modulus.
fn mul_index(a: u32, b: u32, p: u32, k: u32, modulus: &[u16]) -> u32 {
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let mut prod = vec![0u32; 2 * k as usize];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce: x^k ≡ −(c_{k−1} x^{k−1} + … + c₀) (mod modulus).
    for i in (k as usize..prod.len()).rev() {
        let coeff = prod[i];
        if coeff == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate() {
            let pos = i - k as usize + j;
            prod[pos] = (prod[pos] + coeff * (p - m as u32 % p) % p) % p;
        }
    }
    let mut out = 0;
    let mut place = 1;
    for &c in prod.iter().take(k as usize) {
        out += c * place;
        place *= p;
    }
    out
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(v % p);
        v /= p;
    }
    d
}

/// Lexicographically least monic irreducible of degree k over Z_p, comparing
/// coefficient tuples (c_{k−1}, …, c₀). Encoding m = Σ cᵢ pⁱ counts upward in
/// exactly that order, so a plain upward scan finds it.
fn least_irreducible(p: u32, k: u32) -> Vec<u16> {
    let count = (p as u64).pow(k);
    for m in 0..count {
        let coeffs: Vec<u32> = digits(m as u32, p, k);
        if is_irreducible(&coeffs, p, k) {
            return coeffs.iter().map(|&c| c as u16).collect();
        }
    }
    unreachable!("irreducible polynomials of every degree exist over Z_p");
}

/// Irreducibility of x^k + Σ cᵢ xⁱ over Z_p by trial division against every
/// monic polynomial of degree 1..=k/2. Fine at this scale: p^(k/2+1) divisors
/// at most, and k ≤ 16.
fn is_irreducible(coeffs: &[u32], p: u32, k: u32) -> bool {
    if coeffs[0] == 0 {
        return false; // divisible by x
    }
    let mut f: Vec<u32> = coeffs.to_vec();
    f.push(1); // monic leading term
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d);
        for m in 0..count {
            let mut g = digits(m as u32, p, d);
            g.push(1);
            if poly_rem_is_zero(&f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u32> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dg;
            for (j, &gc) in g.iter().enumerate() {
                let pos = shift + j;
                r[pos] = (r[pos] + lead * (p - gc % p)) % p;
            }
        }
        r.pop();
        while r.len() > dg && *r.last().unwrap() == 0 {
            r.pop();
        }
    }
    r.iter().all(|&c| c == 0)
}
