//! Tokenization interface used for snippet windowing.
//!
//! Chunk geometry must not depend on any embedding vendor, so the tokenizer
//! is an injected trait with a model-free default: maximal alphanumeric runs
//! plus single punctuation marks, whitespace discarded.

use alloc::vec::Vec;

/// One token with its byte span in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    /// Byte offset of the first byte of the token.
    pub start: usize,
    /// Byte offset one past the last byte of the token.
    pub end: usize,
}

impl Token {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// Maps text to an ordered token list with byte offsets.
///
/// Implementations must guarantee that the text between any two token
/// boundaries is a substring of the input, so a token span can always be
/// sliced back out verbatim.
pub trait Tokenizer {
    fn tokenize(&self, text: &str) -> Vec<Token>;
}

/// Default tokenizer: each maximal run of alphanumeric characters is one
/// token, each non-whitespace punctuation character is its own token.
#[derive(Debug, Clone, Copy, Default)]
pub struct WordTokenizer;

impl Tokenizer for WordTokenizer {
    fn tokenize(&self, text: &str) -> Vec<Token> {
        let mut tokens = Vec::new();
        let mut word_start: Option<usize> = None;
        for (idx, ch) in text.char_indices() {
            if ch.is_alphanumeric() {
                if word_start.is_none() {
                    word_start = Some(idx);
                }
            } else {
                if let Some(start) = word_start.take() {
                    tokens.push(Token { start, end: idx });
                }
                if !ch.is_whitespace() {
                    tokens.push(Token {
                        start: idx,
                        end: idx + ch.len_utf8(),
                    });
                }
            }
        }
        if let Some(start) = word_start {
            tokens.push(Token {
                start,
                end: text.len(),
            });
        }
        tokens
    }
}

/// Slice the source text covered by `tokens[range]`, inclusive of the
/// whitespace between the first and last token of the range.
pub fn span_text<'t>(text: &'t str, tokens: &[Token], start: usize, len: usize) -> &'t str {
    if len == 0 || start >= tokens.len() {
        return "";
    }
    let last = core::cmp::min(start + len, tokens.len()) - 1;
    &text[tokens[start].start..tokens[last].end]
}
