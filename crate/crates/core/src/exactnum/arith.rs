//! Elementary arithmetic functions on positive integers.

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize expects n >= 1");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Number of distinct prime divisors.
pub fn rho(d: u64) -> u32 {
    factorize(d).len() as u32
}

/// Number of positive divisors.
pub fn sigma0(d: u64) -> u64 {
    factorize(d).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// Square-free part `s` with `d = s * c^2`.
pub fn squarefree_part(d: u64) -> u64 {
    squarefree_decomposition(d).0
}

/// Returns `(s, c)` with `d = s * c^2` and `s` square-free.
pub fn squarefree_decomposition(d: u64) -> (u64, u64) {
    decompose(&factorize(d))
}

pub fn prime_divisors(d: u64) -> Vec<u64> {
    factorize(d).into_iter().map(|(p, _)| p).collect()
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

fn decompose(factors: &[(u64, u32)]) -> (u64, u64) {
    let mut s = 1u64;
    let mut c = 1u64;
    for &(p, e) in factors {
        if e % 2 == 1 {
            s *= p;
        }
        c *= p.pow(e / 2);
    }
    (s, c)
}

/// Smallest-prime-factor sieve for bulk factorisation in threshold scans.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize + 1;
        let mut spf = vec![0u32; n.max(2)];
        for i in 2..n {
            if spf[i] == 0 {
                let mut j = i;
                while j < n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Self { spf }
    }

    pub fn limit(&self) -> u64 {
        self.spf.len() as u64 - 1
    }

    pub fn factorize(&self, mut n: u64) -> Vec<(u64, u32)> {
        assert!(n >= 1 && n <= self.limit(), "{n} outside sieve range");
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            n /= p;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn rho(&self, n: u64) -> u32 {
        self.factorize(n).len() as u32
    }

    pub fn squarefree_decomposition(&self, n: u64) -> (u64, u64) {
        decompose(&self.factorize(n))
    }
}
