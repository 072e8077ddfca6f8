//! Knowledge base construction: documents split into pages, pages split into
//! fixed-token-window snippets. Pages and snippets are the two retrieval
//! granularities.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

pub mod chunk;
pub mod tokenize;

pub use chunk::chunk_page;
pub use tokenize::{Token, Tokenizer, WordTokenizer};

/// Default snippet window in tokens.
pub const DEFAULT_WINDOW: usize = 115;

/// A source document of the knowledge base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// Full text, equal to the concatenation of the document's pages.
    pub text: String,
}

/// One page of a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Page {
    pub doc_id: String,
    pub page_no: u32,
    pub text: String,
}

/// A fixed-token-window slice of a page.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snippet {
    pub doc_id: String,
    pub page_no: u32,
    pub snippet_no: u32,
    /// Index of the first token of the window within the page.
    pub token_start: usize,
    /// Number of tokens in the window.
    pub token_len: usize,
    pub text: String,
}

impl Snippet {
    /// Stable identifier used in reports and evidence audit trails.
    pub fn key(&self) -> SnippetKey {
        SnippetKey {
            doc_id: self.doc_id.clone(),
            page_no: self.page_no,
            snippet_no: self.snippet_no,
        }
    }
}

/// Identifies a snippet; ordering doubles as the deterministic tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SnippetKey {
    pub doc_id: String,
    pub page_no: u32,
    pub snippet_no: u32,
}

impl core::fmt::Display for SnippetKey {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/p{}/s{}", self.doc_id, self.page_no, self.snippet_no)
    }
}

/// Identifies a page; ordering doubles as the deterministic tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PageKey {
    pub doc_id: String,
    pub page_no: u32,
}

impl core::fmt::Display for PageKey {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/p{}", self.doc_id, self.page_no)
    }
}

/// Ingestion settings, echoed into the serialized knowledge base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestConfig {
    /// Snippet window in tokens.
    pub window: usize,
    /// Window stride in tokens; equal to `window` means non-overlapping.
    pub stride: usize,
    /// Delimiter that splits a plain-text document into pages. Documents
    /// that ship a `pages` array are taken as pre-split.
    #[serde(default = "default_page_delimiter")]
    pub page_delimiter: String,
}

fn default_page_delimiter() -> String {
    String::from("\u{000C}")
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            window: DEFAULT_WINDOW,
            stride: DEFAULT_WINDOW,
            page_delimiter: default_page_delimiter(),
        }
    }
}

/// One document as supplied by a manifest, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentRecord {
    pub id: String,
    pub title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pages: Option<Vec<String>>,
}

/// The fully chunked corpus. Immutable once built; safe to share read-only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnowledgeBase {
    pub config: IngestConfig,
    pub documents: Vec<Document>,
    pub pages: Vec<Page>,
    pub snippets: Vec<Snippet>,
}

impl KnowledgeBase {
    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn page_text(&self, key: &PageKey) -> Option<&str> {
        self.pages
            .iter()
            .find(|p| p.doc_id == key.doc_id && p.page_no == key.page_no)
            .map(|p| p.text.as_str())
    }

    pub fn snippet(&self, key: &SnippetKey) -> Option<&Snippet> {
        self.snippets.iter().find(|s| {
            s.doc_id == key.doc_id && s.page_no == key.page_no && s.snippet_no == key.snippet_no
        })
    }

    /// Title and year of the document owning `doc_id`.
    pub fn document(&self, doc_id: &str) -> Option<&Document> {
        self.documents.iter().find(|d| d.id == doc_id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    /// Two manifest records share the same id.
    DuplicateId(String),
    /// Invalid window/stride combination.
    BadWindow { window: usize, stride: usize },
}

impl core::fmt::Display for CorpusError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CorpusError::DuplicateId(id) => write!(f, "duplicate document id {id:?}"),
            CorpusError::BadWindow { window, stride } => {
                write!(f, "invalid chunk geometry: window {window}, stride {stride} (need 1 <= stride <= window)")
            }
        }
    }
}

impl core::error::Error for CorpusError {}

/// A record that was skipped during ingestion; the run continues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRecord {
    pub id: String,
    pub reason: String,
}

/// Result of [`ingest_records`]: the knowledge base plus per-record skips.
#[derive(Debug, Clone, PartialEq)]
pub struct Ingestion {
    pub kb: KnowledgeBase,
    pub skipped: Vec<SkippedRecord>,
}

/// Build a knowledge base from manifest records.
///
/// Records with empty text are skipped and reported; a duplicate id aborts
/// the ingestion. Page/snippet counts are a deterministic function of the
/// records and the config. The stored document text is the concatenation of
/// its pages, so pages always reassemble into the document.
pub fn ingest_records(
    records: Vec<DocumentRecord>,
    config: &IngestConfig,
    tokenizer: &dyn Tokenizer,
) -> Result<Ingestion, CorpusError> {
    if config.window == 0 || config.stride == 0 || config.stride > config.window {
        return Err(CorpusError::BadWindow {
            window: config.window,
            stride: config.stride,
        });
    }

    let mut seen = BTreeSet::new();
    let mut kb = KnowledgeBase {
        config: config.clone(),
        documents: Vec::new(),
        pages: Vec::new(),
        snippets: Vec::new(),
    };
    let mut skipped = Vec::new();

    for record in records {
        if !seen.insert(record.id.clone()) {
            return Err(CorpusError::DuplicateId(record.id));
        }

        let page_texts: Vec<String> = match (&record.pages, &record.text) {
            (Some(pages), _) => pages.clone(),
            (None, Some(text)) if !config.page_delimiter.is_empty() => text
                .split(config.page_delimiter.as_str())
                .map(String::from)
                .collect(),
            (None, Some(text)) => alloc::vec![text.clone()],
            (None, None) => Vec::new(),
        };
        let page_texts: Vec<String> = page_texts.into_iter().filter(|p| !p.is_empty()).collect();

        if page_texts.iter().all(|p| p.trim().is_empty()) {
            skipped.push(SkippedRecord {
                id: record.id,
                reason: String::from("empty text"),
            });
            continue;
        }

        let text: String = page_texts.concat();
        for (page_no, page_text) in page_texts.into_iter().enumerate() {
            let page = Page {
                doc_id: record.id.clone(),
                page_no: page_no as u32,
                text: page_text,
            };
            let mut snippets = chunk_page(&page, tokenizer, config.window, config.stride)?;
            kb.snippets.append(&mut snippets);
            kb.pages.push(page);
        }
        kb.documents.push(Document {
            id: record.id,
            title: record.title,
            year: record.year,
            source: record.source,
            text,
        });
    }

    Ok(Ingestion { kb, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;

    fn record(id: &str, text: &str) -> DocumentRecord {
        DocumentRecord {
            id: id.to_string(),
            title: format!("Title {id}"),
            year: Some(2021),
            source: None,
            text: Some(text.to_string()),
            pages: None,
        }
    }

    fn words(n: usize) -> String {
        (0..n).map(|i| format!("w{i}")).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn one_window_per_page() {
        let config = IngestConfig::default();
        let records = vec![
            record("a", &words(115)),
            record("b", &words(115)),
            record("c", &words(115)),
        ];
        let out = ingest_records(records, &config, &WordTokenizer).unwrap();
        assert_eq!(out.kb.documents.len(), 3);
        assert_eq!(out.kb.pages.len(), 3);
        assert_eq!(out.kb.snippets.len(), 3);
        assert!(out.skipped.is_empty());
    }

    #[test]
    fn long_page_gets_tail_snippet() {
        let config = IngestConfig::default();
        let out = ingest_records(vec![record("a", &words(231))], &config, &WordTokenizer).unwrap();
        let lens: Vec<usize> = out.kb.snippets.iter().map(|s| s.token_len).collect();
        assert_eq!(lens, vec![115, 115, 1]);
    }

    #[test]
    fn duplicate_id_aborts_with_the_id() {
        let config = IngestConfig::default();
        let err = ingest_records(
            vec![record("dup", "one two"), record("dup", "three four")],
            &config,
            &WordTokenizer,
        )
        .unwrap_err();
        assert_eq!(err, CorpusError::DuplicateId("dup".to_string()));
    }

    #[test]
    fn empty_text_is_skipped_and_counted() {
        let config = IngestConfig::default();
        let out = ingest_records(
            vec![record("a", ""), record("b", "real content here")],
            &config,
            &WordTokenizer,
        )
        .unwrap();
        assert_eq!(out.kb.documents.len(), 1);
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.skipped[0].id, "a");
    }

    #[test]
    fn form_feed_splits_pages_and_pages_reassemble_document() {
        let config = IngestConfig::default();
        let text = "first page words\u{000C}second page words";
        let out = ingest_records(vec![record("a", text)], &config, &WordTokenizer).unwrap();
        assert_eq!(out.kb.pages.len(), 2);
        let rebuilt: String = out.kb.pages.iter().map(|p| p.text.as_str()).collect();
        assert_eq!(rebuilt, out.kb.documents[0].text);
    }

    #[test]
    fn manifest_pages_array_is_taken_as_pre_split() {
        let config = IngestConfig::default();
        let rec = DocumentRecord {
            id: "a".to_string(),
            title: "A".to_string(),
            year: None,
            source: None,
            text: None,
            pages: Some(vec!["page one text".to_string(), "page two text".to_string()]),
        };
        let out = ingest_records(vec![rec], &config, &WordTokenizer).unwrap();
        assert_eq!(out.kb.pages.len(), 2);
        assert_eq!(out.kb.documents[0].text, "page one textpage two text");
    }

    #[test]
    fn serialization_round_trip_preserves_everything() {
        let config = IngestConfig {
            window: 4,
            stride: 2,
            ..IngestConfig::default()
        };
        let out = ingest_records(
            vec![record("a", &words(9)), record("b", &words(3))],
            &config,
            &WordTokenizer,
        )
        .unwrap();
        let json = serde_json::to_string(&out.kb).unwrap();
        let back: KnowledgeBase = serde_json::from_str(&json).unwrap();
        assert_eq!(back, out.kb);
        // Deterministic: identical input + config => identical bytes.
        assert_eq!(json, serde_json::to_string(&back).unwrap());
    }
}
