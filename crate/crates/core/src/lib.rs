//! Exact and modular engines for Eulerian, Euler, tangent, Genocchi and
//! Bernoulli numbers, brute-force combinatorial oracles, and a registry of
//! congruences evaluated over ranges of primes.

pub mod arith;
pub mod congruences;
pub mod oracles;
pub mod params;
pub mod sequences;
pub mod series;
