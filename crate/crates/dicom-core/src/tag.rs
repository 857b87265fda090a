use std::fmt;
use std::str::FromStr;

/// A DICOM attribute tag, `(group,element)`.
///
/// Tags order by group first, then element, both compared as unsigned values,
/// which is the order elements must appear in an encoded data set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tag {
    pub group: u16,
    pub element: u16,
}

impl Tag {
    pub const fn new(group: u16, element: u16) -> Self {
        Tag { group, element }
    }

    /// Group length elements, `(gggg,0000)`.
    pub fn is_group_length(self) -> bool {
        self.element == 0
    }

    /// Odd groups carry private attributes.
    pub fn is_private(self) -> bool {
        self.group % 2 == 1
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:04X},{:04X})", self.group, self.element)
    }
}

impl fmt::Debug for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<(u16, u16)> for Tag {
    fn from((group, element): (u16, u16)) -> Self {
        Tag::new(group, element)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid tag literal {0:?}")]
pub struct ParseTagError(pub String);

/// Accepts `(GGGG,EEEE)`, `GGGG,EEEE` and `GGGGEEEE`, case-insensitive hex.
impl FromStr for Tag {
    type Err = ParseTagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseTagError(s.to_string());
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let (g, e) = match inner.split_once(',') {
            Some((g, e)) => (g.trim(), e.trim()),
            None if inner.len() == 8 => inner.split_at(4),
            None => return Err(err()),
        };
        if g.len() != 4 || e.len() != 4 {
            return Err(err());
        }
        let group = u16::from_str_radix(g, 16).map_err(|_| err())?;
        let element = u16::from_str_radix(e, 16).map_err(|_| err())?;
        Ok(Tag::new(group, element))
    }
}
