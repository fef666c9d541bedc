//! Arithmetic in finite fields `F_{p^m}`.
//!
//! A [`Field`] is a cheap, shareable handle. Elements are encoded as `u32`
//! codes: the code of `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, so the prime subfield occupies
//! codes `0..p`. The hot paths of the crate operate on raw codes through
//! [`Field`] methods; [`FieldElement`] is the checked value type used at API
//! boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::Value;
use thiserror::Error;

/// Largest field order for which log/exp tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime greater than 3")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("F_{p}^{m} exceeds the supported field order {MAX_FIELD_ORDER}")]
    TooLarge { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("x^p - x = c has no root in F_{p}^{m}; extend the field degree by a factor of p")]
    NotSplit { p: u32, m: u32 },
    #[error("invalid field element {0:?}")]
    BadElement(String),
}

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low-to-high, length m + 1.
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for a fixed primitive element g, doubled to skip reductions.
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p(), self.m(), self.modulus())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over F_p, coefficients low-to-high.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    /// Remainder of `a` modulo `f` (f nonzero).
    pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut f = f.to_vec();
        trim(&mut f);
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], p) as u64;
        while r.len() > df {
            let dr = r.len() - 1;
            let c = r[dr] as u64 * lead_inv % p as u64;
            for (k, &fk) in f.iter().enumerate() {
                let idx = dr - df + k;
                r[idx] = ((r[idx] as u64 + (p as u64 - c) * fk as u64) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
        rem(&prod, f, p)
    }

    pub fn pow_mod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
        let mut result = rem(&[1], f, p);
        let mut base = rem(a, f, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        result
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let m = f.len() - 1;
        if m == 1 {
            return true;
        }
        let x = vec![0, 1];
        let mut h = x.clone();
        for _ in 1..=m / 2 {
            h = pow_mod(&h, p as u64, f, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(&mut diff);
            let g = gcd(&diff, f, p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

impl Field {
    /// Builds `F_{p^m}` with the least monic irreducible modulus of degree `m`,
    /// where polynomials are ordered by their coefficient tuple read from the
    /// top degree down.
    pub fn new(p: u64, m: u32) -> Result<Self, GfError> {
        if p <= 3 || !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        if m == 0 {
            return Err(GfError::BadDegree);
        }
        let q = (p as u128).pow(m);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(GfError::TooLarge { p: p as u32, m });
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = least_irreducible(p, m);
        let (exp, log) = build_tables(p, m, q, &modulus);
        Ok(Field {
            inner: Arc::new(FieldInner {
                p,
                m,
                q,
                modulus,
                exp,
                log,
            }),
        })
    }

    pub fn prime(p: u64) -> Result<Self, GfError> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.m == 1
    }

    pub fn ptr_eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let d = a % p + b % p;
            out += if d >= p { d - p } else { d } * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.m == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            let d = a % p;
            out += if d == 0 { 0 } else { p - d } * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.inner.m == 1 {
            return ((a as u64 * b as u64) % self.inner.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        let inner = &*self.inner;
        let l = inner.log[a as usize];
        Ok(if l == 0 { 1 } else { inner.exp[(inner.q - 1 - l) as usize] })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.inner;
        let order = (inner.q - 1) as u64;
        let l = inner.log[a as usize] as u64;
        inner.exp[((l * (e % order)) % order) as usize]
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.inner.p as u64)
    }

    /// The unique `b` with `b^p = a`, namely `a^{p^{m-1}}`.
    pub fn pth_root(&self, a: u32) -> u32 {
        let mut r = a;
        for _ in 1..self.inner.m {
            r = self.frobenius(r);
        }
        r
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.inner.p as i64) as u32
    }

    /// Coordinates of `a` in the power basis, low-to-high, length m.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let p = self.inner.p;
        let mut a = a;
        (0..self.inner.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<u32, GfError> {
        let p = self.inner.p;
        if coords.len() > self.inner.m as usize || coords.iter().any(|&c| c >= p) {
            return Err(GfError::BadElement(format!("{coords:?}")));
        }
        Ok(coords.iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    pub fn contains(&self, code: u32) -> bool {
        code < self.inner.q
    }

    pub fn in_prime_subfield(&self, code: u32) -> bool {
        code < self.inner.p
    }

    pub fn elem(&self, code: u32) -> FieldElement {
        assert!(self.contains(code), "code {code} outside {self:?}");
        FieldElement {
            field: self.clone(),
            code,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        self.elem(self.from_int(n))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |c| self.elem(c))
    }

    /// `dst += c * src`, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [u32], c: u32, src: &[u32]) {
        if c == 0 {
            return;
        }
        if self.inner.m == 1 {
            let p = self.inner.p as u64;
            let c = c as u64;
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = ((*d as u64 + c * s as u64) % p) as u32;
                }
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = self.add(*d, self.mul(c, s));
                }
            }
        }
    }

    pub fn scale_in_place(&self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Roots of `x^p - x = c`, found by solving the F_p-linear system for the
    /// Artin–Schreier map on coordinates. Returns either no roots
    /// ([`GfError::NotSplit`]) or exactly p roots sorted by code.
    pub fn artin_schreier_roots(&self, c: u32) -> Result<Vec<u32>, GfError> {
        let p = self.inner.p;
        let m = self.inner.m as usize;
        // Columns: images of the power basis vectors under x -> x^p - x.
        let mut rows = vec![vec![0u32; m + 1]; m];
        let mut basis_code = 1u32;
        for col in 0..m {
            let img = self.sub(self.frobenius(basis_code), basis_code);
            for (row, coord) in self.coords(img).into_iter().enumerate() {
                rows[row][col] = coord;
            }
            basis_code *= p;
        }
        for (row, coord) in self.coords(c).into_iter().enumerate() {
            rows[row][m] = coord;
        }
        let prime = PrimeArith(p);
        let pivots = prime.rref(&mut rows, m);
        if pivots.contains(&m) {
            return Err(GfError::NotSplit { p, m: m as u32 });
        }
        let mut particular = vec![0u32; m];
        for (r, &col) in pivots.iter().enumerate() {
            particular[col] = rows[r][m];
        }
        let base = self.from_coords(&particular)?;
        // The kernel of x -> x^p - x is exactly the prime subfield.
        let mut roots: Vec<u32> = (0..p).map(|a| self.add(base, a)).collect();
        roots.sort_unstable();
        Ok(roots)
    }

    pub fn format_element(&self, code: u32) -> String {
        if self.in_prime_subfield(code) {
            code.to_string()
        } else {
            let parts: Vec<String> = self.coords(code).iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// Parses an integer (reduced into the prime subfield) or a coordinate
    /// tuple `[c0,c1,...]` written low-to-high.
    pub fn parse_element(&self, s: &str) -> Result<u32, GfError> {
        let t = s.trim();
        if let Some(body) = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let coords = body
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<i64>().map(|v| self.from_int(v)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| GfError::BadElement(s.to_string()))?;
            return self.from_coords(&coords);
        }
        t.parse::<i64>()
            .map(|v| self.from_int(v))
            .map_err(|_| GfError::BadElement(s.to_string()))
    }

    pub fn element_to_json(&self, code: u32) -> Value {
        if self.in_prime_subfield(code) {
            Value::String(code.to_string())
        } else {
            Value::Array(self.coords(code).into_iter().map(Value::from).collect())
        }
    }

    pub fn element_from_json(&self, v: &Value) -> Result<u32, GfError> {
        match v {
            Value::String(s) => self.parse_element(s),
            Value::Number(n) => n
                .as_i64()
                .map(|x| self.from_int(x))
                .ok_or_else(|| GfError::BadElement(n.to_string())),
            Value::Array(items) => {
                let coords = items
                    .iter()
                    .map(|x| x.as_i64().map(|v| self.from_int(v)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| GfError::BadElement(v.to_string()))?;
                self.from_coords(&coords)
            }
            other => Err(GfError::BadElement(other.to_string())),
        }
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            p: self.p(),
            m: self.m(),
            modulus: self.modulus().to_vec(),
        }
    }
}

/// Report form of a field: `{p, m, modulus}` with the modulus low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FieldDescription {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m);
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if f[0] == 0 {
            continue;
        }
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn code_to_poly(code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut c = code;
    let mut out: Vec<u32> = (0..m)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect();
    poly::trim(&mut out);
    out
}

fn poly_to_code(a: &[u32], p: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let order = (q - 1) as u64;
    let factors = prime_factors(order);
    let generator = (1..q)
        .map(|g| code_to_poly(g, p, m))
        .find(|g| {
            factors
                .iter()
                .all(|&r| poly::pow_mod(g, order / r, modulus, p) != vec![1])
        })
        .expect("multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u32; 2 * (q as usize - 1)];
    let mut log = vec![0u32; q as usize];
    let mut cur = vec![1u32];
    for k in 0..(q - 1) as usize {
        let code = poly_to_code(&cur, p);
        exp[k] = code;
        log[code as usize] = k as u32;
        cur = poly::mul_mod(&cur, &generator, modulus, p);
    }
    for k in 0..(q - 1) as usize {
        exp[k + q as usize - 1] = exp[k];
    }
    (exp, log)
}

/// Row reduction over a prime field, used for the small coordinate systems
/// inside [`Field::artin_schreier_roots`].
struct PrimeArith(u32);

impl PrimeArith {
    fn inv(&self, a: u32) -> u32 {
        let p = self.0 as u64;
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r as u32
    }

    /// Reduces `rows` (each of length `ncols + 1`, augmented) and returns pivot
    /// columns, where a pivot in column `ncols` flags inconsistency.
    fn rref(&self, rows: &mut [Vec<u32>], ncols: usize) -> Vec<usize> {
        let p = self.0 as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..=ncols {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][col]) as u64;
            for x in rows[r].iter_mut() {
                *x = (*x as u64 * inv % p) as u32;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col] as u64;
                    for j in 0..=ncols {
                        rows[i][j] = ((rows[i][j] as u64 + (p - f) * rows[r][j] as u64) % p) as u32;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        pivots
    }
}

/// A field element that knows its field. Binary operators panic when the
/// operands live in different fields; the `checked_*` methods report
/// [`GfError::FieldMismatch`] instead.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_element(self.code))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_element(self.code))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.code)
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, code: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            code,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.code, other.code)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.code, other.code)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.code, other.code)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.div(self.code, other.code)?))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        Ok(self.with(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.code, e))
    }

    pub fn frobenius(&self) -> Self {
        self.with(self.field.frobenius(self.code))
    }

    pub fn pth_root(&self) -> Self {
        self.with(self.field.pth_root(self.code))
    }

    /// All solutions of `x^p - x = self`.
    pub fn artin_schreier_roots(&self) -> Result<Vec<Self>, GfError> {
        Ok(self
            .field
            .artin_schreier_roots(self.code)?
            .into_iter()
            .map(|c| self.with(c))
            .collect())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn rejects_small_and_composite_characteristic() {
        assert_eq!(Field::new(4, 1).unwrap_err(), GfError::NonPrime(4));
        assert_eq!(Field::new(3, 1).unwrap_err(), GfError::NonPrime(3));
        assert_eq!(Field::new(2, 3).unwrap_err(), GfError::NonPrime(2));
        assert_eq!(Field::new(25, 1).unwrap_err(), GfError::NonPrime(25));
        assert_eq!(Field::new(5, 0).unwrap_err(), GfError::BadDegree);
    }

    #[test]
    fn prime_field_residues() {
        let f = f5();
        assert_eq!(f.order(), 5);
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.inv(0), Err(GfError::DivisionByZero));
        assert_eq!(f.neg(0), 0);
        for a in 0..5 {
            assert_eq!(f.frobenius(a), a);
        }
    }

    #[test]
    fn element_values_check_their_field() {
        let f = f5();
        let g = Field::new(5, 2).unwrap();
        let a = f.int(3);
        let b = g.int(3);
        assert_eq!(a.checked_add(&b).unwrap_err(), GfError::FieldMismatch);
        assert_eq!((&a + &f.int(4)).code(), 2);
        assert_eq!((&a * &f.int(2)).code(), 1);
        assert_eq!(f.zero().inv().unwrap_err(), GfError::DivisionByZero);
        // Two separately built copies of the same field are interchangeable.
        let f2 = f5();
        assert!(a.checked_mul(&f2.int(2)).is_ok());
    }

    #[test]
    fn field_creation_is_deterministic() {
        let a = Field::new(5, 5).unwrap();
        let b = Field::new(5, 5).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.order(), 3125);
        assert_eq!(a.modulus().len(), 6);
        assert_eq!(*a.modulus().last().unwrap(), 1);
    }

    #[test]
    fn extension_inverses() {
        let f = Field::new(5, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let a = rng.gen_range(1..f.order());
            assert_eq!(f.mul(f.inv(a).unwrap(), a), 1);
        }
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        let f = Field::new(5, 5).unwrap();
        for a in 0..f.order() {
            assert_eq!(f.pth_root(f.frobenius(a)), a);
            assert_eq!(f.frobenius(f.pth_root(a)), a);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = rng.gen_range(0..f.order());
            let b = f.pow(a, 625);
            assert_eq!(f.pth_root(a), b);
            assert_eq!(f.pow(b, 5), a);
        }
    }

    #[test]
    fn artin_schreier_over_prime_field() {
        let f = f5();
        assert_eq!(f.artin_schreier_roots(0).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(
            f.artin_schreier_roots(1).unwrap_err(),
            GfError::NotSplit { p: 5, m: 1 }
        );
    }

    #[test]
    fn artin_schreier_matches_exhaustive_scan() {
        let f = Field::new(5, 5).unwrap();
        for c in [1u32, 2, 7, 123, 3124] {
            let scan: Vec<u32> = (0..f.order())
                .filter(|&x| f.sub(f.frobenius(x), x) == c)
                .collect();
            match f.artin_schreier_roots(c) {
                Ok(roots) => assert_eq!(roots, scan),
                Err(GfError::NotSplit { .. }) => assert!(scan.is_empty()),
                Err(e) => panic!("{e}"),
            }
        }
        let roots = f.artin_schreier_roots(1).unwrap();
        assert_eq!(roots.len(), 5);
        for r in &roots {
            assert!(f.in_prime_subfield(f.sub(*r, roots[0])));
        }
    }

    #[test]
    fn element_encoding_round_trips() {
        let f = Field::new(5, 3).unwrap();
        assert_eq!(f.parse_element("-1").unwrap(), 4);
        assert_eq!(f.parse_element("[1,2,3]").unwrap(), 1 + 2 * 5 + 3 * 25);
        assert_eq!(f.format_element(86), "[1,2,3]");
        assert_eq!(f.format_element(3), "3");
        assert!(f.parse_element("[1,2,3,4]").is_err());
        assert!(f.parse_element("x").is_err());
        let v = f.element_to_json(86);
        assert_eq!(f.element_from_json(&v).unwrap(), 86);
    }
}
