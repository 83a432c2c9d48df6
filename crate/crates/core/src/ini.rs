//! Minimal INI reader shared by setup.cfg inspection and the tool config.
//!
//! Dialect: `[section]` headers, `key = value` or `key: value` assignments,
//! `#` and `;` comments, blank lines, and indented continuation lines that
//! extend the previous value.

/// One parsed section with its key/value pairs in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IniSection {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

/// Parse outcome. `malformed` is set when a line could not be interpreted
/// (garbage outside any rule, or a key before the first section header);
/// whatever parsed up to that point is still returned.
#[derive(Debug, Clone, Default)]
pub struct IniDocument {
    pub sections: Vec<IniSection>,
    pub malformed: bool,
}

impl IniDocument {
    pub fn section(&self, name: &str) -> Option<&IniSection> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.section(section)?
            .entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

pub fn parse_ini(text: &str) -> IniDocument {
    let mut doc = IniDocument::default();
    let mut current: Option<IniSection> = None;
    // (section index implied by `current`, entry index) of the last assignment,
    // so continuation lines know where to append.
    let mut last_key: Option<usize> = None;

    for raw in text.lines() {
        let line = raw.trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            last_key = None;
            continue;
        }
        if trimmed.starts_with('#') || trimmed.starts_with(';') {
            continue;
        }
        // Continuation: indented line extending the previous value.
        if line.starts_with(|c: char| c == ' ' || c == '\t') {
            match (&mut current, last_key) {
                (Some(section), Some(idx)) => {
                    let (_, value) = &mut section.entries[idx];
                    if !value.is_empty() {
                        value.push('\n');
                    }
                    value.push_str(trimmed);
                    continue;
                }
                _ => {
                    doc.malformed = true;
                    continue;
                }
            }
        }
        if let Some(rest) = trimmed.strip_prefix('[') {
            match rest.find(']') {
                Some(end) => {
                    if let Some(section) = current.take() {
                        doc.sections.push(section);
                    }
                    current = Some(IniSection {
                        name: rest[..end].trim().to_string(),
                        entries: Vec::new(),
                    });
                    last_key = None;
                }
                None => doc.malformed = true,
            }
            continue;
        }
        let sep = trimmed
            .char_indices()
            .find(|(_, c)| *c == '=' || *c == ':')
            .map(|(i, _)| i);
        match (sep, &mut current) {
            (Some(i), Some(section)) => {
                let key = trimmed[..i].trim().to_string();
                let value = trimmed[i + 1..].trim().to_string();
                if key.is_empty() {
                    doc.malformed = true;
                } else {
                    section.entries.push((key, value));
                    last_key = Some(section.entries.len() - 1);
                }
            }
            // Assignment before any section header, or a bare word.
            _ => doc.malformed = true,
        }
    }
    if let Some(section) = current.take() {
        doc.sections.push(section);
    }
    doc
}
