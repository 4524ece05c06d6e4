//! Graded quivers: named objects and degree-graded arrows between them.

use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Interned name for objects and arrows. Ordered by string contents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(Arc<str>);

impl Sym {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Sym {
    fn from(s: &str) -> Self {
        Sym(Arc::from(s))
    }
}

impl From<String> for Sym {
    fn from(s: String) -> Self {
        Sym(Arc::from(s.as_str()))
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowInfo {
    pub name: Sym,
    pub src: Sym,
    pub tgt: Sym,
    pub deg: i64,
}

/// A finite quiver with nonnegative arrow degrees. Arrow names are unique.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedQuiver {
    objects: Vec<Sym>,
    arrows: std::collections::BTreeMap<Sym, ArrowInfo>,
}

impl GradedQuiver {
    pub fn new() -> Self {
        GradedQuiver::default()
    }

    pub fn add_object(&mut self, name: impl Into<Sym>) -> Result<()> {
        let name = name.into();
        if self.objects.contains(&name) {
            return Err(Error::DuplicateName(format!("object {name}")));
        }
        self.objects.push(name);
        Ok(())
    }

    pub fn add_arrow(
        &mut self,
        name: impl Into<Sym>,
        src: impl Into<Sym>,
        tgt: impl Into<Sym>,
        deg: i64,
    ) -> Result<()> {
        let (name, src, tgt) = (name.into(), src.into(), tgt.into());
        if !self.objects.contains(&src) {
            return Err(Error::UnknownObject(src.to_string()));
        }
        if !self.objects.contains(&tgt) {
            return Err(Error::UnknownObject(tgt.to_string()));
        }
        if deg < 0 {
            return Err(Error::DegreeMismatch(format!("negative degree for {name}")));
        }
        if self.arrows.contains_key(&name) {
            return Err(Error::DuplicateName(format!("arrow {name}")));
        }
        self.arrows.insert(
            name.clone(),
            ArrowInfo {
                name,
                src,
                tgt,
                deg,
            },
        );
        Ok(())
    }

    pub fn has_object(&self, name: &Sym) -> bool {
        self.objects.contains(name)
    }

    pub fn objects(&self) -> impl Iterator<Item = &Sym> {
        self.objects.iter()
    }

    pub fn sorted_objects(&self) -> Vec<Sym> {
        let mut v = self.objects.clone();
        v.sort();
        v
    }

    pub fn arrow(&self, name: &Sym) -> Result<&ArrowInfo> {
        self.arrows
            .get(name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn arrows(&self) -> impl Iterator<Item = &ArrowInfo> {
        self.arrows.values()
    }

    pub fn arrow_names(&self) -> impl Iterator<Item = &Sym> {
        self.arrows.keys()
    }
}

/// A composable sequence of arrows, written left to right in diagrammatic
/// order: in the word `f g`, the arrow `g` is applied first, so the path runs
/// from the source of the last arrow to the target of the first. The empty
/// path is an identity morphism (endpoints supplied by context).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Path(pub Vec<Sym>);

impl Path {
    pub fn empty() -> Self {
        Path(Vec::new())
    }

    pub fn of(names: &[&str]) -> Self {
        Path(names.iter().map(|s| Sym::from(*s)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Path(v)
    }

    /// Validate composability and return (src, tgt, degree); fails on an
    /// empty path since its endpoints are contextual.
    pub fn typecheck(&self, quiver: &GradedQuiver) -> Result<(Sym, Sym, i64)> {
        let mut deg = 0;
        let mut iter = self.0.iter().rev();
        let first = iter
            .next()
            .ok_or_else(|| Error::EndpointMismatch("empty path has no endpoints".into()))?;
        let info = quiver.arrow(first)?;
        let src = info.src.clone();
        let mut cur = info.tgt.clone();
        deg += info.deg;
        for name in iter {
            let info = quiver.arrow(name)?;
            if info.src != cur {
                return Err(Error::EndpointMismatch(format!(
                    "arrow {name} has source {} but needs {cur} in path {self}",
                    info.src
                )));
            }
            cur = info.tgt.clone();
            deg += info.deg;
        }
        Ok((src, cur, deg))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        // length first, then lexicographic on arrow names
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_order_is_length_then_lex() {
        let a = Path::of(&["z"]);
        let b = Path::of(&["a", "a"]);
        assert!(a < b);
        assert!(Path::of(&["a", "b"]) < Path::of(&["a", "c"]));
        assert!(Path::empty() < a);
    }

    #[test]
    fn typecheck_rejects_noncomposable() {
        let mut q = GradedQuiver::new();
        q.add_object("0").unwrap();
        q.add_object("1").unwrap();
        q.add_arrow("a", "1", "0", 0).unwrap();
        q.add_arrow("a*", "0", "1", 0).unwrap();
        // a* then a: runs 1 -> 0 -> 1
        let p = Path::of(&["a*", "a"]);
        let (src, tgt, deg) = p.typecheck(&q).unwrap();
        assert_eq!((src.as_str(), tgt.as_str(), deg), ("1", "1", 0));
        assert!(Path::of(&["a", "a"]).typecheck(&q).is_err());
    }
}
