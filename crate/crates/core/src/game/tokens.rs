use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest list size a vertex may start with.
pub const MAX_TOKENS: u8 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TokenError {
    #[error("token assignment has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has {tokens} tokens; at most {MAX_TOKENS} allowed")]
    TooManyTokens { vertex: usize, tokens: u32 },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("line {line}: malformed token entry {text:?}")]
    Malformed { line: usize, text: String },
    #[error("vertex {0} assigned twice")]
    Duplicate(usize),
    #[error("vertex {0} has no token count")]
    Missing(usize),
    #[error("{0} requires a path graph")]
    NotAPath(&'static str),
    #[error("unknown token shorthand {0:?}")]
    UnknownShorthand(String),
}

/// Per-vertex list sizes `f`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TokenAssignment(Vec<u8>);

impl TokenAssignment {
    pub fn new(tokens: Vec<u8>) -> Result<Self, TokenError> {
        if tokens.len() > MAX_VERTICES {
            return Err(TokenError::VertexOutOfRange(tokens.len() - 1));
        }
        if let Some((v, &k)) = tokens.iter().enumerate().find(|(_, &k)| k > MAX_TOKENS) {
            return Err(TokenError::TooManyTokens {
                vertex: v,
                tokens: k as u32,
            });
        }
        Ok(TokenAssignment(tokens))
    }

    /// `f(v) = k` for every vertex.
    pub fn uniform(n: usize, k: u8) -> Result<Self, TokenError> {
        Self::new(vec![k; n])
    }

    /// All 2 except `special`, which gets 1.
    pub fn f_prime(n: usize, special: usize) -> Result<Self, TokenError> {
        if special >= n {
            return Err(TokenError::VertexOutOfRange(special));
        }
        let mut t = vec![2; n];
        t[special] = 1;
        Self::new(t)
    }

    /// Like [`f_prime`](Self::f_prime), with the special vertex being the
    /// unique degree-1 vertex when there is one, and vertex 0 otherwise.
    pub fn f_star(g: &Graph) -> Self {
        let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
        let special = if leaves.len() == 1 { leaves[0] } else { 0 };
        Self::f_prime(g.n(), special).expect("special vertex is in range")
    }

    /// Path budget: endpoints 1, internal vertices 2.
    pub fn f_double_prime(g: &Graph) -> Result<Self, TokenError> {
        if g.n() < 2 || !g.is_tree() || (0..g.n()).any(|v| g.degree(v) > 2) {
            return Err(TokenError::NotAPath("fdoubleprime"));
        }
        Self::new(
            (0..g.n())
                .map(|v| if g.degree(v) == 1 { 1 } else { 2 })
                .collect(),
        )
    }

    /// Parses either a shorthand (`uniform:K`, `fprime:V`, `fstar`,
    /// `fdoubleprime`) or a document of `v k` lines covering every vertex.
    pub fn parse(spec: &str, g: &Graph) -> Result<Self, TokenError> {
        let trimmed = spec.trim();
        if let Some(k) = trimmed.strip_prefix("uniform:") {
            let k = parse_num(k, 1, trimmed)?;
            if k > MAX_TOKENS as usize {
                return Err(TokenError::TooManyTokens {
                    vertex: 0,
                    tokens: k.min(u32::MAX as usize) as u32,
                });
            }
            return Self::uniform(g.n(), k as u8);
        }
        if let Some(v) = trimmed.strip_prefix("fprime:") {
            return Self::f_prime(g.n(), parse_num(v, 1, trimmed)?);
        }
        match trimmed {
            "fstar" => return Ok(Self::f_star(g)),
            "fdoubleprime" => return Self::f_double_prime(g),
            _ => {}
        }
        if trimmed.contains(':') || (!trimmed.is_empty() && !trimmed.contains(char::is_whitespace))
        {
            return Err(TokenError::UnknownShorthand(trimmed.to_string()));
        }

        let mut tokens: Vec<Option<u8>> = vec![None; g.n()];
        for (idx, raw) in spec.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let malformed = || TokenError::Malformed {
                line: idx + 1,
                text: line.to_string(),
            };
            let mut parts = line.split_whitespace();
            let (Some(v), Some(k), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(malformed());
            };
            let v: usize = v.parse().map_err(|_| malformed())?;
            let k: u32 = k.parse().map_err(|_| malformed())?;
            if v >= g.n() {
                return Err(TokenError::VertexOutOfRange(v));
            }
            if k > MAX_TOKENS as u32 {
                return Err(TokenError::TooManyTokens {
                    vertex: v,
                    tokens: k,
                });
            }
            if tokens[v].replace(k as u8).is_some() {
                return Err(TokenError::Duplicate(v));
            }
        }
        let tokens = tokens
            .into_iter()
            .enumerate()
            .map(|(v, k)| k.ok_or(TokenError::Missing(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(tokens)
    }

    /// Checks that this assignment fits `g`.
    pub fn check_against(&self, g: &Graph) -> Result<(), TokenError> {
        if self.0.len() != g.n() {
            return Err(TokenError::LengthMismatch {
                expected: g.n(),
                found: self.0.len(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&k| k as u32).sum()
    }

    pub fn max(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Restriction to the vertices of `keep`, in increasing id order.
    pub fn restricted(&self, keep: VertexSet) -> TokenAssignment {
        TokenAssignment(keep.iter().map(|v| self.0[v]).collect())
    }

    /// The packed form used by game states.
    pub fn packed(&self) -> Tokens {
        let mut t = Tokens::ZERO;
        for (v, &k) in self.0.iter().enumerate() {
            t.set(v, k);
        }
        t
    }
}

fn parse_num(s: &str, line: usize, whole: &str) -> Result<usize, TokenError> {
    s.trim().parse().map_err(|_| TokenError::Malformed {
        line,
        text: whole.to_string(),
    })
}

impl fmt::Debug for TokenAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Remaining tokens per vertex, two bits each.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Tokens(u64);

const LOW_BITS: u64 = 0x5555_5555_5555_5555;

impl Tokens {
    pub const ZERO: Tokens = Tokens(0);

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn get(self, v: usize) -> u8 {
        (self.0 >> (2 * v) & 3) as u8
    }

    #[inline]
    pub fn set(&mut self, v: usize, k: u8) {
        debug_assert!(k <= MAX_TOKENS);
        self.0 = self.0 & !(3 << (2 * v)) | (k as u64) << (2 * v);
    }

    /// Vertices holding at least one token.
    #[inline]
    pub fn nonzero(self) -> VertexSet {
        let lanes = (self.0 | self.0 >> 1) & LOW_BITS;
        VertexSet::from_bits(compress_even_bits(lanes))
    }

    /// Vertices holding exactly `k` tokens (`1 <= k <= 3`).
    #[inline]
    pub fn exactly(self, k: u8) -> VertexSet {
        let lo = if k & 1 == 1 { self.0 } else { !self.0 };
        let hi = if k & 2 == 2 {
            self.0 >> 1
        } else {
            !(self.0 >> 1)
        };
        VertexSet::from_bits(compress_even_bits(lo & hi & LOW_BITS))
    }

    /// Removes one token from every member of `s`; members must hold one.
    #[inline]
    pub fn decremented(self, s: VertexSet) -> Tokens {
        Tokens(self.0 - spread_to_even_bits(s.bits()))
    }

    /// Zeroes the lanes of every member of `s`.
    #[inline]
    pub fn cleared(self, s: VertexSet) -> Tokens {
        let lanes = spread_to_even_bits(s.bits());
        Tokens(self.0 & !(lanes | lanes << 1))
    }

    pub fn total(self) -> u32 {
        let lo = self.0 & LOW_BITS;
        let hi = self.0 >> 1 & LOW_BITS;
        lo.count_ones() + 2 * hi.count_ones()
    }

    pub fn max(self) -> u8 {
        if !self.exactly(3).is_empty() {
            3
        } else if self.0 >> 1 & LOW_BITS != 0 {
            2
        } else if self.0 != 0 {
            1
        } else {
            0
        }
    }

    pub fn to_vec(self, n: usize) -> Vec<u8> {
        (0..n).map(|v| self.get(v)).collect()
    }
}

#[inline]
fn spread_to_even_bits(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | x << 16) & 0x0000_FFFF_0000_FFFF;
    x = (x | x << 8) & 0x00FF_00FF_00FF_00FF;
    x = (x | x << 4) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | x << 2) & 0x3333_3333_3333_3333;
    x = (x | x << 1) & LOW_BITS;
    x
}

#[inline]
fn compress_even_bits(x: u64) -> u32 {
    let mut x = x & LOW_BITS;
    x = (x | x >> 1) & 0x3333_3333_3333_3333;
    x = (x | x >> 2) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | x >> 4) & 0x00FF_00FF_00FF_00FF;
    x = (x | x >> 8) & 0x0000_FFFF_0000_FFFF;
    x = (x | x >> 16) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

impl fmt::Debug for Tokens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (64 - self.0.leading_zeros() as usize).div_ceil(2);
        write!(f, "{:?}", self.to_vec(n))
    }
}
