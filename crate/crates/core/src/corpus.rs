//! Corpus data model: documents segmented into clauses, annotated with
//! emotion-cause pairs, plus label derivation and pair-candidate enumeration.
//!
//! The on-disk format is UTF-8 JSON-lines, one document per line:
//!
//! ```text
//! {"doc_id": "d1", "clauses": ["...", "..."], "pairs": [[1, 1], [2, 3]]}
//! ```
//!
//! Clause indices are 0-based everywhere. Optional `emotion_categories` and
//! `keywords` fields are accepted and ignored.

use std::collections::{BTreeSet, HashSet};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CorpusError;
use crate::pairing::{relative_bucket, DEFAULT_CLIP_DISTANCE};

/// A clause: the atomic unit both auxiliary tasks and the pairing task
/// classify. Tokens are lowercased at ingestion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub tokens: Vec<String>,
    pub raw_text: String,
}

/// A document: an ordered clause list plus the annotated emotion-cause pairs.
/// Pairs are `(emotion_index, cause_index)` with 0-based clause indices; a
/// clause may appear in several pairs and as both emotion and cause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub doc_id: String,
    pub clauses: Vec<Clause>,
    pub gold_pairs: BTreeSet<(usize, usize)>,
}

impl Document {
    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }
}

/// Per-clause binary targets for the two auxiliary tasks. `emotion[i]` is
/// true iff clause `i` is the emotion side of some gold pair, `cause[j]`
/// likewise for the cause side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseLabels {
    pub emotion: Vec<bool>,
    pub cause: Vec<bool>,
}

/// One ordered clause pair `(emotion_index, cause_index)` with its clipped
/// relative-position bucket and gold label. The predicted distribution is
/// filled in by the pair classifier at inference time.
#[derive(Debug, Clone, PartialEq)]
pub struct PairCandidate {
    pub emotion_index: usize,
    pub cause_index: usize,
    pub bucket: usize,
    pub label: bool,
    pub predicted: Option<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DocumentRecord {
    doc_id: String,
    clauses: Vec<String>,
    pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    emotion_categories: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    keywords: Option<serde_json::Value>,
}

/// Lowercase and whitespace-split pre-segmented clause text.
pub fn tokenize_clause(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn document_from_record(record: DocumentRecord, line: usize) -> Result<Document, CorpusError> {
    let doc_id = record.doc_id;
    if record.clauses.is_empty() {
        return Err(CorpusError::Validation {
            doc_id,
            message: "document has no clauses".to_string(),
        });
    }
    let mut clauses = Vec::with_capacity(record.clauses.len());
    for (idx, raw) in record.clauses.into_iter().enumerate() {
        let tokens = tokenize_clause(&raw);
        if tokens.is_empty() {
            return Err(CorpusError::Validation {
                doc_id,
                message: format!("clause {idx} is empty after tokenization"),
            });
        }
        clauses.push(Clause {
            tokens,
            raw_text: raw,
        });
    }
    let d = clauses.len();
    let mut gold_pairs = BTreeSet::new();
    for [e, c] in record.pairs {
        if e >= d || c >= d {
            return Err(CorpusError::Validation {
                doc_id,
                message: format!("pair [{e}, {c}] out of range for {d} clauses (line {line})"),
            });
        }
        // duplicates collapse silently: the pair set is a set
        gold_pairs.insert((e, c));
    }
    Ok(Document {
        doc_id,
        clauses,
        gold_pairs,
    })
}

/// Parse a JSON-lines corpus file. Documents are returned in file order;
/// blank lines are skipped. Malformed JSON reports the 1-based line number;
/// out-of-range pair indices report the offending document id.
pub fn parse_corpus(path: &Path) -> Result<Vec<Document>, CorpusError> {
    let file = std::fs::File::open(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus_reader(BufReader::new(file))
}

/// Parse a corpus from any buffered reader (used by tests and the file API).
pub fn parse_corpus_reader<R: BufRead>(reader: R) -> Result<Vec<Document>, CorpusError> {
    let mut documents = Vec::new();
    let mut seen_ids = HashSet::new();
    for (zero_line, line) in reader.lines().enumerate() {
        let line_no = zero_line + 1;
        let line = line.map_err(|e| CorpusError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let record: DocumentRecord =
            serde_json::from_str(&line).map_err(|e| CorpusError::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
        let doc = document_from_record(record, line_no)?;
        if !seen_ids.insert(doc.doc_id.clone()) {
            return Err(CorpusError::Validation {
                doc_id: doc.doc_id,
                message: format!("duplicate doc_id (line {line_no})"),
            });
        }
        documents.push(doc);
    }
    Ok(documents)
}

/// Write documents back out in the canonical JSON-lines format.
pub fn serialize_corpus<W: Write>(docs: &[Document], mut writer: W) -> std::io::Result<()> {
    for doc in docs {
        let record = DocumentRecord {
            doc_id: doc.doc_id.clone(),
            clauses: doc.clauses.iter().map(|c| c.raw_text.clone()).collect(),
            pairs: doc.gold_pairs.iter().map(|&(e, c)| [e, c]).collect(),
            emotion_categories: None,
            keywords: None,
        };
        serde_json::to_writer(&mut writer, &record)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Derive per-clause binary emotion/cause targets from the gold pair set.
pub fn derive_clause_labels(doc: &Document) -> ClauseLabels {
    let d = doc.len();
    let mut emotion = vec![false; d];
    let mut cause = vec![false; d];
    for &(e, c) in &doc.gold_pairs {
        emotion[e] = true;
        cause[c] = true;
    }
    ClauseLabels { emotion, cause }
}

/// Enumerate all `d * d` ordered clause pairs in row-major order (emotion
/// index outer, cause index inner). Self-pairs are included: a clause can be
/// its own cause. Buckets use the default clipping distance.
pub fn enumerate_pair_candidates(doc: &Document) -> Vec<PairCandidate> {
    let d = doc.len();
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            out.push(PairCandidate {
                emotion_index: i,
                cause_index: j,
                bucket: relative_bucket(i, j, DEFAULT_CLIP_DISTANCE),
                label: doc.gold_pairs.contains(&(i, j)),
                predicted: None,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn figure_doc_line() -> &'static str {
        r#"{"doc_id": "fig1", "clauses": ["Adele arrived at her apartment late in the afternoon after a long day of work.", "She was still furious with her husband for not remembering her 40th birthday.", "As soon as she unlocked the door, she gasped with surprise;", "Mikhael and Harriet had organized a huge party for her."], "pairs": [[1, 1], [2, 3]]}"#
    }

    #[test]
    fn parses_four_clause_document_with_two_pairs() {
        let docs = parse_corpus_reader(Cursor::new(figure_doc_line())).unwrap();
        assert_eq!(docs.len(), 1);
        let doc = &docs[0];
        assert_eq!(doc.len(), 4);
        assert_eq!(doc.gold_pairs.len(), 2);
        assert!(doc.gold_pairs.contains(&(1, 1)));
        assert!(doc.gold_pairs.contains(&(2, 3)));
    }

    #[test]
    fn single_clause_self_pair_accepted() {
        let line = r#"{"doc_id": "d", "clauses": ["ok"], "pairs": [[0, 0]]}"#;
        let docs = parse_corpus_reader(Cursor::new(line)).unwrap();
        assert_eq!(docs[0].len(), 1);
        assert_eq!(docs[0].gold_pairs.iter().next(), Some(&(0, 0)));
    }

    #[test]
    fn out_of_range_pair_is_validation_error() {
        let line = r#"{"doc_id": "bad", "clauses": ["a", "b c", "d", "e"], "pairs": [[0, 5]]}"#;
        let err = parse_corpus_reader(Cursor::new(line)).unwrap_err();
        match err {
            CorpusError::Validation { doc_id, .. } => assert_eq!(doc_id, "bad"),
            other => panic!("expected validation error, got {other}"),
        }
    }

    #[test]
    fn malformed_json_names_line_number() {
        let input = format!("{}\nnot json\n", figure_doc_line());
        let err = parse_corpus_reader(Cursor::new(input)).unwrap_err();
        match err {
            CorpusError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn ignored_annotation_fields_are_accepted() {
        let line = r#"{"doc_id": "d", "clauses": ["she was happy", "the sun shone"], "pairs": [[0, 1]], "emotion_categories": ["joy"], "keywords": ["happy"]}"#;
        let docs = parse_corpus_reader(Cursor::new(line)).unwrap();
        assert_eq!(docs[0].gold_pairs.len(), 1);
    }

    #[test]
    fn duplicate_doc_id_rejected() {
        let line = r#"{"doc_id": "d", "clauses": ["ok"], "pairs": []}"#;
        let input = format!("{line}\n{line}\n");
        assert!(parse_corpus_reader(Cursor::new(input)).is_err());
    }

    #[test]
    fn tokens_are_lowercased() {
        let docs = parse_corpus_reader(Cursor::new(figure_doc_line())).unwrap();
        assert_eq!(docs[0].clauses[0].tokens[0], "adele");
    }

    #[test]
    fn figure_document_labels() {
        let docs = parse_corpus_reader(Cursor::new(figure_doc_line())).unwrap();
        let labels = derive_clause_labels(&docs[0]);
        assert_eq!(labels.emotion, vec![false, true, true, false]);
        assert_eq!(labels.cause, vec![false, true, false, true]);
    }

    #[test]
    fn empty_pair_set_gives_all_zero_labels() {
        let doc = Document {
            doc_id: "d".into(),
            clauses: vec![
                Clause {
                    tokens: vec!["a".into()],
                    raw_text: "a".into(),
                },
                Clause {
                    tokens: vec!["b".into()],
                    raw_text: "b".into(),
                },
            ],
            gold_pairs: BTreeSet::new(),
        };
        let labels = derive_clause_labels(&doc);
        assert!(labels.emotion.iter().all(|&x| !x));
        assert!(labels.cause.iter().all(|&x| !x));
    }

    #[test]
    fn shared_emotion_clause_labels() {
        // oracle: direct set-membership scan over the pair set
        let doc = Document {
            doc_id: "d".into(),
            clauses: (0..4)
                .map(|i| Clause {
                    tokens: vec![format!("t{i}")],
                    raw_text: format!("t{i}"),
                })
                .collect(),
            gold_pairs: [(0, 1), (0, 2)].into_iter().collect(),
        };
        let labels = derive_clause_labels(&doc);
        assert_eq!(labels.emotion, vec![true, false, false, false]);
        assert_eq!(labels.cause, vec![false, true, true, false]);
    }

    #[test]
    fn candidate_enumeration_is_row_major_d_squared() {
        let docs = parse_corpus_reader(Cursor::new(figure_doc_line())).unwrap();
        let candidates = enumerate_pair_candidates(&docs[0]);
        assert_eq!(candidates.len(), 16);
        for (pos, cand) in candidates.iter().enumerate() {
            assert_eq!(cand.emotion_index, pos / 4);
            assert_eq!(cand.cause_index, pos % 4);
        }
        let positives: Vec<_> = candidates.iter().filter(|c| c.label).collect();
        assert_eq!(positives.len(), 2);
    }

    #[test]
    fn single_clause_candidate() {
        let line = r#"{"doc_id": "d", "clauses": ["ok"], "pairs": [[0, 0]]}"#;
        let docs = parse_corpus_reader(Cursor::new(line)).unwrap();
        let candidates = enumerate_pair_candidates(&docs[0]);
        assert_eq!(candidates.len(), 1);
        assert!(candidates[0].label);
    }

    #[test]
    fn roundtrip_preserves_semantics() {
        let docs = parse_corpus_reader(Cursor::new(figure_doc_line())).unwrap();
        let mut buf = Vec::new();
        serialize_corpus(&docs, &mut buf).unwrap();
        let reparsed = parse_corpus_reader(Cursor::new(buf)).unwrap();
        assert_eq!(docs, reparsed);
    }
}
