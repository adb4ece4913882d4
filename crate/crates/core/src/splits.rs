//! Randomized train/validation/test splits.
//!
//! Each corpus is split 80/10/10 by document count (floor rule for train and
//! validation, remainder to test), independently for each of the configured
//! number of splits. Split `k` uses a seed drawn from a ChaCha stream keyed
//! by the master seed, so regeneration with the same master seed is
//! bit-identical.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::Document;
use crate::error::CorpusError;

/// Number of random splits used for reporting.
pub const NUM_SPLITS: usize = 10;

/// Minimum corpus size for a valid 80/10/10 split.
pub const MIN_CORPUS_SIZE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub train: Vec<String>,
    pub val: Vec<String>,
    pub test: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSet {
    pub master_seed: u64,
    pub splits: Vec<Split>,
}

impl SplitSet {
    pub fn save(&self, path: &Path) -> Result<(), CorpusError> {
        let json = serde_json::to_string_pretty(self).expect("split set serializes");
        std::fs::write(path, json).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| CorpusError::Parse {
            line: 0,
            message: format!("split file {}: {e}", path.display()),
        })
    }
}

/// Generate [`NUM_SPLITS`] randomized 80/10/10 splits.
pub fn make_splits(corpus: &[Document], master_seed: u64) -> Result<SplitSet, CorpusError> {
    make_n_splits(corpus, master_seed, NUM_SPLITS)
}

/// Generate `n` randomized splits from `n` distinct derived seeds.
pub fn make_n_splits(
    corpus: &[Document],
    master_seed: u64,
    n: usize,
) -> Result<SplitSet, CorpusError> {
    if corpus.len() < MIN_CORPUS_SIZE {
        return Err(CorpusError::CorpusTooSmall {
            got: corpus.len(),
            need: MIN_CORPUS_SIZE,
        });
    }
    let ids: Vec<&str> = corpus.iter().map(|d| d.doc_id.as_str()).collect();
    let total = ids.len();
    let n_train = (total as f64 * 0.8).floor() as usize;
    let n_val = (total as f64 * 0.1).floor() as usize;

    let mut seed_rng = ChaCha8Rng::seed_from_u64(master_seed);
    let mut derived = Vec::with_capacity(n);
    while derived.len() < n {
        let s = seed_rng.next_u64();
        if !derived.contains(&s) {
            derived.push(s);
        }
    }

    let splits = derived
        .into_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..total).collect();
            order.shuffle(&mut rng);
            let pick = |range: std::ops::Range<usize>| {
                order[range].iter().map(|&i| ids[i].to_string()).collect()
            };
            Split {
                train: pick(0..n_train),
                val: pick(n_train..n_train + n_val),
                test: pick(n_train + n_val..total),
            }
        })
        .collect();

    Ok(SplitSet {
        master_seed,
        splits,
    })
}
