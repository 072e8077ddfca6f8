//! Fixed-token-window snippet extraction over page text.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::tokenize::{span_text, Tokenizer};
use super::{CorpusError, Page, Snippet};

/// Split a page into token-window snippets.
///
/// Snippet `i` starts at token `i * stride` and spans up to `window` tokens;
/// the last snippet may be shorter. Every token of the page lands in at
/// least one snippet. An empty page yields an empty list.
pub fn chunk_page(
    page: &Page,
    tokenizer: &dyn Tokenizer,
    window: usize,
    stride: usize,
) -> Result<Vec<Snippet>, CorpusError> {
    if window == 0 {
        return Err(CorpusError::BadWindow { window, stride });
    }
    if stride == 0 || stride > window {
        return Err(CorpusError::BadWindow { window, stride });
    }

    let tokens = tokenizer.tokenize(&page.text);
    let mut snippets = Vec::new();
    let mut start = 0usize;
    let mut snippet_no = 0u32;
    while start < tokens.len() {
        let len = core::cmp::min(window, tokens.len() - start);
        snippets.push(Snippet {
            doc_id: page.doc_id.clone(),
            page_no: page.page_no,
            snippet_no,
            token_start: start,
            token_len: len,
            text: span_text(&page.text, &tokens, start, len).to_string(),
        });
        snippet_no += 1;
        start += stride;
    }
    Ok(snippets)
}
