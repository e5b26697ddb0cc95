//! The stanza text format shared by the space database and reference corpora.
//!
//! A file is a sequence of blocks separated by a single blank line. Each line
//! of a block is either a `#` comment or a `key=value` field. Blocks without
//! fields are kept as free comment blocks (file headers, section notes).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    Comment(String),
    Field(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub lines: Vec<Line>,
    /// 1-based line number of the first line, 0 for generated blocks.
    pub line_no: usize,
}

impl Block {
    pub fn new() -> Self {
        Block {
            lines: Vec::new(),
            line_no: 0,
        }
    }

    pub fn comment(&mut self, text: &str) {
        self.lines.push(Line::Comment(text.to_string()));
    }

    pub fn field(&mut self, key: &str, value: impl Into<String>) {
        self.lines.push(Line::Field(key.to_string(), value.into()));
    }

    pub fn is_comment_only(&self) -> bool {
        self.lines.iter().all(|l| matches!(l, Line::Comment(_)))
    }

    pub fn comments(&self) -> Vec<String> {
        self.lines
            .iter()
            .filter_map(|l| match l {
                Line::Comment(c) => Some(c.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn fields(&self) -> impl Iterator<Item = (&str, &str)> {
        self.lines.iter().filter_map(|l| match l {
            Line::Field(k, v) => Some((k.as_str(), v.as_str())),
            _ => None,
        })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn get_all(&self, key: &str) -> Vec<&str> {
        self.fields().filter(|(k, _)| *k == key).map(|(_, v)| v).collect()
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::Parse {
            line: self.line_no,
            msg: format!("missing field `{key}`"),
        })
    }
}

impl Default for Block {
    fn default() -> Self {
        Self::new()
    }
}

pub fn parse(text: &str) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut cur = Block::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() {
            if !cur.lines.is_empty() {
                blocks.push(std::mem::take(&mut cur));
            }
            continue;
        }
        if cur.lines.is_empty() {
            cur.line_no = i + 1;
        }
        if line.starts_with('#') {
            cur.lines.push(Line::Comment(line.to_string()));
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected `key=value` or `# comment`, got `{line}`"),
            });
        };
        let key = k.trim();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("invalid key `{key}`"),
            });
        }
        cur.lines.push(Line::Field(key.to_string(), v.trim().to_string()));
    }
    if !cur.lines.is_empty() {
        blocks.push(cur);
    }
    Ok(blocks)
}

pub fn serialize(blocks: &[Block]) -> String {
    let mut out = String::new();
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for l in &b.lines {
            match l {
                Line::Comment(c) => out.push_str(c),
                Line::Field(k, v) => {
                    out.push_str(k);
                    out.push('=');
                    out.push_str(v);
                }
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# header\n# more\n\n# rec\nname=A\nrank=1\n\nname=B\n";
        let blocks = parse(text).unwrap();
        assert_eq!(blocks.len(), 3);
        assert!(blocks[0].is_comment_only());
        assert_eq!(blocks[1].get("rank"), Some("1"));
        assert_eq!(blocks[2].line_no, 8);
        assert_eq!(serialize(&blocks), text);
    }

    #[test]
    fn rejects_garbage() {
        let err = parse("name=A\nnonsense\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse("Name=A\n").is_err());
    }

    #[test]
    fn values_may_contain_equals() {
        let b = parse("notes=a=b\n").unwrap();
        assert_eq!(b[0].get("notes"), Some("a=b"));
    }
}
