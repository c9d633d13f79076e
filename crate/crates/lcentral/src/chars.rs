//! Dirichlet characters mod q: CRT structure of the unit group, exact
//! root-of-unity evaluation through integer phase arithmetic, conductors
//! and primitivity, Gauss sums, and the orthogonality identities for sums
//! over primitive characters.

use crate::arith::Factorization;
use crate::error::{Error, Result};
use crate::util::{gcd, mod_pow};
use num_complex::Complex64;
use std::sync::Arc;

/// One cyclic factor of (Z/qZ)*: the subgroup of residues mod `modulus`
/// (a prime power dividing q) generated by `generator`, of order `order`.
/// For 2^e with e >= 3 the unit group is not cyclic and contributes two
/// factors, <-1> and <5>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub prime: u64,
    pub power: u32,
    pub modulus: u64,
    pub generator: u64,
    pub order: u64,
}

/// The character group mod q.
///
/// Characters are exponent vectors against the component generators;
/// values are computed as exact integer phases modulo the group exponent
/// and converted to complex numbers only at the boundary. The group is
/// immutable once built and safe to share across threads.
pub struct CharacterGroup {
    q: u64,
    components: Vec<Component>,
    /// group exponent: lcm of the component orders
    exponent: u64,
    /// per-residue phase weights: weights[a*r + i] = dlog_i(a) * (exponent/order_i)
    /// reduced mod exponent; weights[a*r] == u64::MAX marks gcd(a, q) > 1
    weights: Vec<u64>,
    /// cis[t] = e(t / exponent)
    cis: Vec<Complex64>,
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Smallest primitive root mod an odd prime p.
fn primitive_root_mod_p(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = Factorization::of(p - 1).expect("p - 1 >= 1");
    'outer: for g in 2..p {
        for &(ell, _) in &factors.pairs {
            if mod_pow(g, (p - 1) / ell, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

/// A generator of the cyclic group (Z/p^eZ)* for odd p.
fn primitive_root_mod_prime_power(p: u64, e: u32) -> u64 {
    let g = primitive_root_mod_p(p);
    if e == 1 {
        return g;
    }
    // g lifts to p^e unless g^{p-1} = 1 (mod p^2), in which case g + p does
    if mod_pow(g, p - 1, p * p) == 1 {
        g + p
    } else {
        g
    }
}

impl CharacterGroup {
    pub fn new(q: u64) -> Result<Arc<Self>> {
        if q == 0 {
            return Err(Error::Domain("modulus q = 0".into()));
        }
        let fact = Factorization::of(q)?;
        let mut components = Vec::new();
        let mut local_dlogs: Vec<Vec<u32>> = Vec::new();
        for &(p, e) in &fact.pairs {
            if p == 2 {
                match e {
                    1 => {}
                    2 => {
                        components.push(Component {
                            prime: 2,
                            power: 2,
                            modulus: 4,
                            generator: 3,
                            order: 2,
                        });
                        let mut table = vec![0u32; 4];
                        table[1] = 0;
                        table[3] = 1;
                        local_dlogs.push(table);
                    }
                    _ => {
                        let m = 1u64 << e;
                        let ord5 = 1u64 << (e - 2);
                        let mut t_minus = vec![0u32; m as usize];
                        let mut t_five = vec![0u32; m as usize];
                        let mut x = 1u64;
                        for t in 0..ord5 {
                            t_minus[x as usize] = 0;
                            t_five[x as usize] = t as u32;
                            let y = m - x;
                            t_minus[y as usize] = 1;
                            t_five[y as usize] = t as u32;
                            x = x * 5 % m;
                        }
                        components.push(Component {
                            prime: 2,
                            power: e,
                            modulus: m,
                            generator: m - 1,
                            order: 2,
                        });
                        local_dlogs.push(t_minus);
                        components.push(Component {
                            prime: 2,
                            power: e,
                            modulus: m,
                            generator: 5,
                            order: ord5,
                        });
                        local_dlogs.push(t_five);
                    }
                }
            } else {
                let m = p.pow(e);
                let order = (p - 1) * p.pow(e - 1);
                let g = primitive_root_mod_prime_power(p, e);
                let mut table = vec![0u32; m as usize];
                let mut x = 1u64;
                for t in 0..order {
                    table[x as usize] = t as u32;
                    x = x * g % m;
                }
                components.push(Component {
                    prime: p,
                    power: e,
                    modulus: m,
                    generator: g,
                    order,
                });
                local_dlogs.push(table);
            }
        }
        debug_assert_eq!(
            components.iter().map(|c| c.order).product::<u64>(),
            fact.phi()
        );
        let exponent = components.iter().fold(1u64, |acc, c| lcm(acc, c.order));
        let r = components.len();
        let mut weights = vec![0u64; (q as usize) * r.max(1)];
        if r > 0 {
            for a in 0..q {
                let idx = a as usize * r;
                if gcd(a, q) != 1 {
                    weights[idx] = u64::MAX;
                    continue;
                }
                for (i, comp) in components.iter().enumerate() {
                    let d = local_dlogs[i][(a % comp.modulus) as usize] as u64;
                    weights[idx + i] = d % comp.order * (exponent / comp.order) % exponent;
                }
            }
        }
        let cis: Vec<Complex64> = (0..exponent)
            .map(|t| {
                Complex64::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * t as f64 / exponent as f64,
                )
            })
            .collect();
        Ok(Arc::new(CharacterGroup {
            q,
            components,
            exponent,
            weights,
            cis,
        }))
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_orders(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.order).collect()
    }

    /// phi(q): the number of characters.
    pub fn num_characters(&self) -> u64 {
        self.components.iter().map(|c| c.order).product()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// e(t / exponent) from the precomputed table.
    #[inline]
    pub fn cis(&self, t: u64) -> Complex64 {
        self.cis[t as usize]
    }

    /// Integer phase weights of residue a (one entry per component), or
    /// None when gcd(a, q) > 1.
    #[inline]
    pub fn weight_row(&self, a: u64) -> Option<&[u64]> {
        let r = self.components.len();
        if r == 0 {
            return if self.q == 1 || a % 2 == 1 {
                Some(&[])
            } else {
                None
            };
        }
        let idx = a as usize * r;
        if self.weights[idx] == u64::MAX {
            None
        } else {
            Some(&self.weights[idx..idx + r])
        }
    }

    /// The character with the given exponent vector.
    pub fn character(self: &Arc<Self>, exponents: Vec<u64>) -> DirichletCharacter {
        assert_eq!(exponents.len(), self.components.len());
        for (e, c) in exponents.iter().zip(&self.components) {
            assert!(*e < c.order, "exponent out of range");
        }
        DirichletCharacter::build(self.clone(), exponents)
    }

    /// Character by its lexicographic enumeration index (the first
    /// component is the most significant digit; index 0 is principal).
    pub fn character_by_index(self: &Arc<Self>, index: u64) -> DirichletCharacter {
        assert!(index < self.num_characters());
        let mut exps = vec![0u64; self.components.len()];
        let mut rem = index;
        for i in (0..self.components.len()).rev() {
            let ord = self.components[i].order;
            exps[i] = rem % ord;
            rem /= ord;
        }
        self.character(exps)
    }

    /// All characters mod q in enumeration order.
    pub fn characters(self: &Arc<Self>) -> Vec<DirichletCharacter> {
        (0..self.num_characters())
            .map(|i| self.character_by_index(i))
            .collect()
    }

    /// All primitive characters mod q in enumeration order.
    pub fn primitive_characters(self: &Arc<Self>) -> Vec<DirichletCharacter> {
        self.characters()
            .into_iter()
            .filter(|chi| chi.is_primitive())
            .collect()
    }
}

/// A Dirichlet character mod q, represented by exponents on the CRT
/// component generators. Parity and conductor are computed at construction.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<CharacterGroup>,
    exponents: Vec<u64>,
    index: u64,
    parity: u8,
    conductor: u64,
}

impl DirichletCharacter {
    fn build(group: Arc<CharacterGroup>, exponents: Vec<u64>) -> Self {
        let mut index = 0u64;
        for (e, c) in exponents.iter().zip(&group.components) {
            index = index * c.order + e;
        }
        let mut chi = DirichletCharacter {
            group,
            exponents,
            index,
            parity: 0,
            conductor: 1,
        };
        chi.parity = chi.compute_parity();
        chi.conductor = chi.compute_conductor();
        chi
    }

    pub fn group(&self) -> &Arc<CharacterGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.group.q
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The parity in {0, 1} with chi(-1) = (-1)^parity.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == 0
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.group.q
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// The complex-conjugate character.
    pub fn conjugate(&self) -> DirichletCharacter {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.components)
            .map(|(&e, c)| if e == 0 { 0 } else { c.order - e })
            .collect();
        DirichletCharacter::build(self.group.clone(), exps)
    }

    /// Exact integer phase t with chi(n) = e(t / exponent), or None when
    /// gcd(n, q) > 1.
    #[inline]
    pub fn phase(&self, n: u64) -> Option<u64> {
        let q = self.group.q;
        let a = n % q.max(1);
        if q == 1 {
            return Some(0);
        }
        let row = self.group.weight_row(a)?;
        let lambda = self.group.exponent;
        let mut acc = 0u64;
        for (e, w) in self.exponents.iter().zip(row) {
            acc = (acc + e * w) % lambda;
        }
        Some(acc)
    }

    /// chi(n) as a complex number (an exact root of unity up to the final
    /// double-precision conversion), or zero off the units.
    pub fn evaluate(&self, n: i64) -> Complex64 {
        let q = self.group.q as i64;
        let a = n.rem_euclid(q.max(1)) as u64;
        match self.phase(a) {
            Some(t) => self.group.cis(t),
            None => Complex64::new(0.0, 0.0),
        }
    }

    fn compute_parity(&self) -> u8 {
        if self.group.q <= 2 {
            return 0;
        }
        let t = self
            .phase(self.group.q - 1)
            .expect("-1 is a unit for q > 2");
        if t == 0 {
            0
        } else {
            debug_assert_eq!(2 * t, self.group.exponent, "chi(-1) must be a sign");
            1
        }
    }

    /// Smallest d | q such that chi is trivial on every a = 1 (mod d) with
    /// gcd(a, q) = 1; that d is the conductor. Direct search over divisors,
    /// which is fine at this crate's moduli.
    fn compute_conductor(&self) -> u64 {
        let q = self.group.q;
        if q == 1 {
            return 1;
        }
        let divisors = Factorization::of(q).expect("q >= 1").divisors();
        'next: for &d in &divisors {
            let mut a = 1 + d;
            while a < q {
                if gcd(a, q) == 1 && self.phase(a) != Some(0) {
                    continue 'next;
                }
                a += d;
            }
            return d;
        }
        q
    }
}

impl std::fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("q", &self.group.q)
            .field("index", &self.index)
            .field("exponents", &self.exponents)
            .field("parity", &self.parity)
            .field("conductor", &self.conductor)
            .finish()
    }
}

/// Number of primitive characters mod q:
/// q prod_{p||q} (1 - 2/p) prod_{p^2|q} (1 - 1/p)^2, multiplicatively:
/// p - 2 for p || q and p^{e-2} (p-1)^2 for p^e || q, e >= 2.
pub fn phi_star(q: u64) -> Result<u64> {
    if q == 0 {
        return Err(Error::Domain("modulus q = 0".into()));
    }
    let fact = Factorization::of(q)?;
    let mut acc = 1u64;
    for &(p, e) in &fact.pairs {
        acc *= match e {
            1 => p - 2, // p = 2 gives 0: no primitive character mod 2
            _ => (p - 1) * (p - 1) * p.pow(e - 2),
        };
    }
    Ok(acc)
}

/// Deterministic list of the primitive characters mod q.
pub fn primitive_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    Ok(CharacterGroup::new(q)?.primitive_characters())
}

/// Gauss sum tau(chi) = sum_{a mod q} chi(a) e(a/q) by direct summation.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    let step = 2.0 * std::f64::consts::PI / q as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..q {
        if let Some(t) = chi.phase(a) {
            acc += chi.group().cis(t) * Complex64::from_polar(1.0, step * a as f64);
        }
    }
    acc
}

/// Root number epsilon(chi) = tau(chi) / (i^parity sqrt(q)); unimodular for
/// primitive chi.
pub fn root_number(chi: &DirichletCharacter) -> Result<Complex64> {
    if !chi.is_primitive() {
        return Err(Error::Imprimitive {
            q: chi.modulus(),
            index: chi.index() as usize,
        });
    }
    let tau = gauss_sum(chi);
    let i_a = if chi.parity() == 1 {
        Complex64::new(0.0, 1.0)
    } else {
        Complex64::new(1.0, 0.0)
    };
    Ok(tau / (i_a * (chi.modulus() as f64).sqrt()))
}

/// The divisor-sum side of the primitive-character orthogonality identity,
/// in exact integer arithmetic:
///
///   sum*_{chi mod q} chi(m) conj(chi(n)) = sum_{h|q, h|(m-n)} phi(h) mu(q/h)
///
/// and restricted to parity `sign`, half the sum of the (m-n) and
/// (+-)(m+n) variants. Requires gcd(mn, q) = 1.
pub fn orthogonality_formula(q: u64, m: u64, n: u64, sign: Option<u8>) -> Result<i64> {
    if q == 0 {
        return Err(Error::Domain("modulus q = 0".into()));
    }
    if gcd(m, q) != 1 || gcd(n, q) != 1 {
        return Err(Error::Domain(format!(
            "orthogonality requires gcd(mn, q) = 1, got m = {m}, n = {n}, q = {q}"
        )));
    }
    let fact = Factorization::of(q)?;
    let divisors = fact.divisors();
    let div_sum = |delta: i64| -> i64 {
        let dd = delta.unsigned_abs();
        let mut acc = 0i64;
        for &h in &divisors {
            if dd % h == 0 {
                let fh = Factorization::of(h).unwrap();
                let fqh = Factorization::of(q / h).unwrap();
                acc += fh.phi() as i64 * fqh.mu();
            }
        }
        acc
    };
    let minus = div_sum(m as i64 - n as i64);
    match sign {
        None => Ok(minus),
        Some(parity) => {
            let plus = div_sum(m as i64 + n as i64);
            let signed = if parity % 2 == 0 { plus } else { -plus };
            debug_assert_eq!((minus + signed).rem_euclid(2), 0);
            Ok((minus + signed) / 2)
        }
    }
}

/// The character-sum side of the same identity, summed directly over
/// primitive characters (the oracle half of the pair). The imaginary part
/// is a numerical residual only.
pub fn orthogonality_bruteforce(
    q: u64,
    m: u64,
    n: u64,
    sign: Option<u8>,
) -> Result<Complex64> {
    if gcd(m, q) != 1 || gcd(n, q) != 1 {
        return Err(Error::Domain(format!(
            "orthogonality requires gcd(mn, q) = 1, got m = {m}, n = {n}, q = {q}"
        )));
    }
    let group = CharacterGroup::new(q)?;
    let lambda = group.exponent();
    let mut acc = Complex64::new(0.0, 0.0);
    for chi in group.primitive_characters() {
        if let Some(parity) = sign {
            if chi.parity() != parity % 2 {
                continue;
            }
        }
        let tm = chi.phase(m % q).expect("gcd(m, q) = 1");
        let tn = chi.phase(n % q).expect("gcd(n, q) = 1");
        acc += group.cis((tm + lambda - tn) % lambda);
    }
    Ok(acc)
}
