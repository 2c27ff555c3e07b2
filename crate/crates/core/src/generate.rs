//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::hypergraph::Hypergraph;

/// Draws per edge before an empty sample is padded with one random vertex.
const RETRY_CAP: usize = 16;

/// `m` edges on `n` vertices; each vertex joins each edge independently with
/// probability `p`. Edge demands are `min(alpha, |e|)`. Edges are never empty.
pub fn generate_random(
    n: usize,
    m: usize,
    p: f64,
    alpha: u32,
    seed: u64,
) -> Result<Hypergraph, GenerateError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenerateError::Probability(p));
    }
    if alpha == 0 {
        return Err(GenerateError::Alpha);
    }
    if n == 0 && m > 0 {
        return Err(GenerateError::NoVertices(m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let mut edge = Vec::new();
        for _ in 0..RETRY_CAP {
            edge = (0..n).filter(|_| rng.gen_bool(p)).collect();
            if !edge.is_empty() {
                break;
            }
        }
        if edge.is_empty() {
            edge.push(rng.gen_range(0..n));
        }
        edges.push(edge);
    }
    let demands = edges.iter().map(|e| alpha.min(e.len() as u32)).collect();
    Ok(Hypergraph::new(n, edges, demands, None).expect("generated edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = generate_random(20, 15, 0.3, 3, 7).unwrap();
        let b = generate_random(20, 15, 0.3, 3, 7).unwrap();
        let c = generate_random(20, 15, 0.3, 3, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn demands_and_sizes() {
        let h = generate_random(10, 40, 0.05, 2, 1).unwrap();
        assert_eq!(h.num_edges(), 40);
        for (e, &f) in h.edges().iter().zip(h.demands()) {
            assert!(!e.is_empty());
            assert_eq!(f as usize, e.len().min(2));
        }
        let full = generate_random(5, 3, 1.0, 9, 0).unwrap();
        assert!(full.edges().iter().all(|e| e.len() == 5));
        assert_eq!(full.demands(), &[5, 5, 5]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(
            generate_random(3, 3, 0.0, 1, 0),
            Err(GenerateError::Probability(0.0))
        );
        assert!(generate_random(3, 3, 1.5, 1, 0).is_err());
        assert!(generate_random(3, 3, f64::NAN, 1, 0).is_err());
        assert_eq!(generate_random(3, 3, 0.5, 0, 0), Err(GenerateError::Alpha));
        assert_eq!(
            generate_random(0, 2, 0.5, 1, 0),
            Err(GenerateError::NoVertices(2))
        );
        assert_eq!(generate_random(0, 0, 0.5, 1, 0).unwrap().num_vertices(), 0);
    }
}
