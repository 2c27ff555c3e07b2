//! Maximum cardinality bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// A maximum matching between `left` and `right` nodes.
#[derive(Debug, Clone)]
pub struct Matching {
    /// Partner of each left node, if matched.
    pub left_mate: Vec<Option<usize>>,
    /// Partner of each right node, if matched.
    pub right_mate: Vec<Option<usize>>,
    pub size: usize,
}

/// `adj[l]` lists the right neighbours of left node `l`.
pub fn hopcroft_karp(num_right: usize, adj: &[Vec<usize>]) -> Matching {
    let num_left = adj.len();
    let mut mate_l = vec![NIL; num_left];
    let mut mate_r = vec![NIL; num_right];
    let mut dist = vec![0usize; num_left];
    let mut size = 0;

    loop {
        // BFS layering from free left nodes.
        let mut queue = VecDeque::new();
        for l in 0..num_left {
            if mate_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let next = mate_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }

        let mut iter = vec![0usize; num_left];
        for l in 0..num_left {
            if mate_l[l] == NIL && augment(l, adj, &mut mate_l, &mut mate_r, &mut dist, &mut iter) {
                size += 1;
            }
        }
    }

    let wrap = |v: Vec<usize>| v.into_iter().map(|x| (x != NIL).then_some(x)).collect();
    Matching {
        left_mate: wrap(mate_l),
        right_mate: wrap(mate_r),
        size,
    }
}

// Iterative DFS along the BFS layers.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    iter: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    while let Some(&l) = stack.last() {
        if iter[l] == adj[l].len() {
            dist[l] = usize::MAX;
            stack.pop();
            continue;
        }
        let r = adj[l][iter[l]];
        iter[l] += 1;
        let next = mate_r[r];
        if next == NIL {
            // Flip the path recorded on the stack.
            let mut r = r;
            while let Some(l) = stack.pop() {
                let prev = mate_l[l];
                mate_l[l] = r;
                mate_r[r] = l;
                r = prev;
            }
            return true;
        }
        if dist[next] == dist[l] + 1 {
            stack.push(next);
        }
    }
    false
}
