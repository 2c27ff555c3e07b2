//! Turns a numeric response matrix (rows are samples, columns are features)
//! into a hypergraph: each row becomes an edge holding the columns whose
//! value lies more than `sigmas` standard deviations from the row mean.

use std::io::Read;

use crate::error::IngestError;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    /// Keep values strictly above `mean + sigmas·sd`.
    #[default]
    Above,
    /// Keep values strictly below `mean - sigmas·sd`.
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IngestOptions {
    pub sigmas: f64,
    pub alpha: u32,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ingested {
    pub graph: Hypergraph,
    /// 1-based rows that produced no members and were skipped.
    pub dropped_rows: Vec<usize>,
}

/// Reads a header-less CSV matrix. Demands are `min(alpha, |e|)`.
pub fn ingest_response_matrix<R: Read>(
    reader: R,
    opts: &IngestOptions,
) -> Result<Ingested, IngestError> {
    if opts.alpha == 0 {
        return Err(IngestError::Alpha);
    }
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut width = None;
    let mut edges = Vec::new();
    let mut dropped_rows = Vec::new();
    for (idx, record) in csv.records().enumerate() {
        let record = record?;
        let row = idx + 1;
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(IngestError::Ragged {
                row,
                expected,
                found: record.len(),
            });
        }
        let values = record
            .iter()
            .enumerate()
            .map(|(c, cell)| match cell.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(IngestError::NonNumeric {
                    row,
                    column: c + 1,
                    value: cell.to_string(),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;

        let edge = outliers(&values, opts.sigmas, opts.direction);
        if edge.is_empty() {
            log::warn!("row {row} has no values beyond the threshold; skipped");
            dropped_rows.push(row);
        } else {
            edges.push(edge);
        }
    }

    let demands = edges
        .iter()
        .map(|e| opts.alpha.min(e.len() as u32))
        .collect();
    let graph = Hypergraph::new(width.unwrap_or(0), edges, demands, None)
        .expect("column indices are in range");
    Ok(Ingested {
        graph,
        dropped_rows,
    })
}

fn outliers(values: &[f64], sigmas: f64, direction: Direction) -> Vec<usize> {
    if values.is_empty() {
        return Vec::new();
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = (values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n).sqrt();
    values
        .iter()
        .enumerate()
        .filter(|&(_, &x)| match direction {
            Direction::Above => x > mean + sigmas * sd,
            Direction::Below => x < mean - sigmas * sd,
        })
        .map(|(c, _)| c)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(sigmas: f64, alpha: u32) -> IngestOptions {
        IngestOptions {
            sigmas,
            alpha,
            direction: Direction::Above,
        }
    }

    #[test]
    fn thresholds_each_row() {
        // Row 1: mean 2.5, sd ~1.118, threshold ~3.06 -> column 4.
        // Row 2: constant, nothing is strictly above the mean.
        // Row 3: mean 5, sd 5, threshold 7.5 -> columns 2 and 4.
        let text = "1,2,3,4\n5,5,5,5\n0,10,0,10\n";
        let out = ingest_response_matrix(text.as_bytes(), &opts(0.5, 2)).unwrap();
        assert_eq!(out.graph.num_vertices(), 4);
        assert_eq!(out.graph.edges(), &[vec![3], vec![1, 3]]);
        assert_eq!(out.graph.demands(), &[1, 2]);
        assert_eq!(out.dropped_rows, vec![2]);
    }

    #[test]
    fn below_direction() {
        let text = "1,2,3,4\n";
        let o = IngestOptions {
            direction: Direction::Below,
            ..opts(1.0, 1)
        };
        let out = ingest_response_matrix(text.as_bytes(), &o).unwrap();
        assert_eq!(out.graph.edges(), &[vec![0]]);
    }

    #[test]
    fn zero_sigmas_keeps_above_mean() {
        let out = ingest_response_matrix("1, 2, 3\n".as_bytes(), &opts(0.0, 5)).unwrap();
        assert_eq!(out.graph.edges(), &[vec![2]]);
    }

    #[test]
    fn errors() {
        let err = ingest_response_matrix("1,2\n3,x\n".as_bytes(), &opts(1.0, 1)).unwrap_err();
        assert!(matches!(
            err,
            IngestError::NonNumeric {
                row: 2,
                column: 2,
                ..
            }
        ));
        let err = ingest_response_matrix("1,2\n3\n".as_bytes(), &opts(1.0, 1)).unwrap_err();
        assert!(matches!(
            err,
            IngestError::Ragged {
                row: 2,
                expected: 2,
                found: 1
            }
        ));
        let err = ingest_response_matrix("1,nan\n".as_bytes(), &opts(1.0, 1)).unwrap_err();
        assert!(matches!(err, IngestError::NonNumeric { .. }));
        assert!(matches!(
            ingest_response_matrix("1\n".as_bytes(), &opts(1.0, 0)),
            Err(IngestError::Alpha)
        ));
    }

    #[test]
    fn empty_input() {
        let out = ingest_response_matrix("".as_bytes(), &opts(1.0, 1)).unwrap();
        assert_eq!(out.graph, Hypergraph::empty());
    }
}
