//! The catalog of cocartesian Yang-Baxter operators: Artin, GMV (plain and
//! μ-central), Wada-N, Humphries-Magnus, and Crisp-Paris, each shipped with
//! explicit inverses and torsion taken from their defining formulas.

use crate::braid::BraidWord;
use crate::dg::DgPresentation;
use crate::element::Element;
use crate::quiver::{GradedQuiver, Path, Sym};
use crate::rewrite::{Rule, RewriteSystem};
use crate::scalar::Scalar;
use crate::subst::Substitution;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Which catalog family an operator belongs to.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorKind {
    Artin,
    Gmv,
    GmvMuCentral,
    WadaN(i64),
    HumphriesMagnus,
    CrispParis(CpData),
}

/// Crisp-Paris data: a coefficient algebra B presented by invertible loop
/// generators and rule templates, with designated commuting invertible
/// elements x and y given as words (negative entries denote inverses).
#[derive(Clone, Debug, PartialEq)]
pub struct CpData {
    pub label: String,
    /// (generator, formal inverse) loop pairs at the base vertex.
    pub loops: Vec<(String, String)>,
    /// Extra rules per copy, written over the one-copy alphabet where "a"
    /// and "a*" denote the copy's arrows and other names its loops.
    pub relations: Vec<RuleTemplate>,
    pub x_word: Vec<String>,
    pub y_word: Vec<String>,
}

/// A rule over the one-copy alphabet; rhs terms are (coefficient, word),
/// the empty word meaning the identity at the rule's endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleTemplate {
    pub lhs: Vec<String>,
    pub rhs: Vec<(Scalar, Vec<String>)>,
}

impl CpData {
    /// B = k[T^{±1}], x = T, y = 1, I = (aa* + 1 - T): recovers the GMV
    /// operator.
    pub fn shipped() -> CpData {
        CpData {
            label: "shipped".into(),
            loops: vec![("T".into(), "T^-1".into())],
            relations: vec![RuleTemplate {
                lhs: vec!["a".into(), "a*".into()],
                rhs: vec![
                    (Scalar::one(), vec!["T".into()]),
                    (Scalar::int(-1), vec![]),
                ],
            }],
            x_word: vec!["T".into()],
            y_word: vec![],
        }
    }

    fn inverse_of(&self, name: &str) -> Result<String> {
        for (g, gi) in &self.loops {
            if g == name {
                return Ok(gi.clone());
            }
            if gi == name {
                return Ok(g.clone());
            }
        }
        Err(Error::NonInvertible(format!(
            "loop generator {name} has no declared inverse"
        )))
    }

    fn invert_word(&self, word: &[String]) -> Result<Vec<String>> {
        word.iter().rev().map(|g| self.inverse_of(g)).collect()
    }
}

/// A quiver-carried Yang-Baxter operator from the catalog.
#[derive(Clone, Debug)]
pub struct YbOperator {
    pub name: String,
    pub kind: OperatorKind,
}

/// Dualizability data on A^{(2)}: the partial-trace maps and their shipped
/// inverses.
#[derive(Clone, Debug)]
pub struct DualData {
    pub sigma_u_r: Substitution,
    pub sigma_u_r_inv: Substitution,
    pub sigma_u_l: Substitution,
    pub sigma_u_l_inv: Substitution,
}

pub fn catalog_operator(name: &str) -> Result<YbOperator> {
    let kind = if name == "artin" {
        OperatorKind::Artin
    } else if name == "gmv" {
        OperatorKind::Gmv
    } else if name == "gmv_mu_central" {
        OperatorKind::GmvMuCentral
    } else if name == "humphries_magnus" {
        OperatorKind::HumphriesMagnus
    } else if name == "crisp_paris" {
        OperatorKind::CrispParis(CpData::shipped())
    } else if let Some(rest) = name.strip_prefix("wada_n(") {
        let n: i64 = rest
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::UnknownOperator(name.to_string()))?;
        OperatorKind::WadaN(n)
    } else {
        return Err(Error::UnknownOperator(name.to_string()));
    };
    YbOperator::new(name.to_string(), kind)
}

// small builders

fn path_el(q: &GradedQuiver, names: &[String]) -> Result<Element> {
    if names.is_empty() {
        return Err(Error::EndpointMismatch("empty word needs context".into()));
    }
    Element::path(q, Path(names.iter().map(|s| Sym::from(s.as_str())).collect()))
}

fn word_or_identity(q: &GradedQuiver, names: &[String], obj: &str) -> Result<Element> {
    if names.is_empty() {
        Ok(Element::identity(obj))
    } else {
        path_el(q, names)
    }
}

fn mu() -> Scalar {
    Scalar::var("mu")
}

impl YbOperator {
    pub fn new(name: String, kind: OperatorKind) -> Result<YbOperator> {
        if let OperatorKind::CrispParis(data) = &kind {
            // x and y must be invertible words in declared loop pairs and
            // commute with each other
            data.invert_word(&data.x_word)?;
            data.invert_word(&data.y_word)?;
            let op = YbOperator {
                name: name.clone(),
                kind: kind.clone(),
            };
            op.check_cp_commuting(data)?;
            return Ok(op);
        }
        Ok(YbOperator { name, kind })
    }

    fn check_cp_commuting(&self, data: &CpData) -> Result<()> {
        let pres = self.presentation(1)?;
        let x = cp_word(&pres.quiver, &data.x_word, 1, "0")?;
        let y = cp_word(&pres.quiver, &data.y_word, 1, "0")?;
        let xy = pres.mul_nf(&x, &y)?;
        let yx = pres.mul_nf(&y, &x)?;
        if xy != yx {
            return Err(Error::NonInvertible(
                "Crisp-Paris elements x and y do not commute".into(),
            ));
        }
        Ok(())
    }

    /// The n-fold coproduct presentation A^{(n)} this operator acts on.
    pub fn presentation(&self, n: usize) -> Result<DgPresentation> {
        match &self.kind {
            OperatorKind::Artin => artin_presentation(n),
            OperatorKind::Gmv | OperatorKind::WadaN(_) => gmv_presentation(n),
            OperatorKind::GmvMuCentral => mu_central_presentation(n),
            OperatorKind::HumphriesMagnus => hm_presentation(n),
            OperatorKind::CrispParis(data) => cp_presentation(data, n),
        }
    }

    /// σ_{i,i+1} acting on A^{(n)}, 1 ≤ i ≤ n-1.
    pub fn sigma(&self, n: usize, i: usize) -> Result<Substitution> {
        self.sigma_signed(n, i, true)
    }

    pub fn sigma_inv(&self, n: usize, i: usize) -> Result<Substitution> {
        self.sigma_signed(n, i, false)
    }

    fn sigma_signed(&self, n: usize, i: usize, positive: bool) -> Result<Substitution> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("sigma_{i} in B_{n}")));
        }
        match &self.kind {
            OperatorKind::Artin => artin_sigma(n, i, positive),
            OperatorKind::Gmv => wada_sigma(n, i, 1, positive),
            OperatorKind::GmvMuCentral => mu_central_sigma(n, i, positive),
            OperatorKind::WadaN(big_n) => wada_sigma(n, i, *big_n, positive),
            OperatorKind::HumphriesMagnus => hm_sigma(n, i, positive),
            OperatorKind::CrispParis(data) => cp_sigma(data, n, i, positive),
        }
    }

    /// The substitution for a whole braid word, as a left action:
    /// endo(b₁·b₂) = endo(b₁) ∘ endo(b₂).
    ///
    /// For the μ-central operator the composite is computed in the free GMV
    /// carrier, where every image stays a single word, and normalized into
    /// the quotient once at the end.
    pub fn braid_action_endo(&self, b: &BraidWord) -> Result<Substitution> {
        let n = b.strand_count();
        if matches!(self.kind, OperatorKind::GmvMuCentral) {
            let free = YbOperator::new("gmv".into(), OperatorKind::Gmv)?;
            let endo = free.braid_action_endo(b)?;
            return mu_central_from_free(&endo, n);
        }
        let pres = self.presentation(n)?;
        let mut acc = Substitution::identity(&pres);
        for &k in b.letters() {
            let s = self.sigma_signed(n, k.unsigned_abs() as usize, k > 0)?;
            acc = acc.compose(&s, &pres)?;
        }
        Ok(acc)
    }

    /// Declared torsion (χ, χ^{-1}) on copy `copy` of A^{(n)}, when the
    /// operator has one.
    pub fn torsion_on_copy(&self, n: usize, copy: usize) -> Result<Option<(Substitution, Substitution)>> {
        let pres = self.presentation(n)?;
        let q = &pres.quiver;
        let mut chi = Substitution::identity(&pres);
        let mut chi_inv = Substitution::identity(&pres);
        match &self.kind {
            OperatorKind::Artin => {}
            OperatorKind::HumphriesMagnus => return Ok(None),
            OperatorKind::Gmv | OperatorKind::GmvMuCentral | OperatorKind::WadaN(_) => {
                let exp: i64 = match &self.kind {
                    OperatorKind::WadaN(big_n) => *big_n,
                    _ => 1,
                };
                let a = format!("a{copy}");
                let astar = format!("a{copy}*");
                let t = format!("T{copy}");
                let tinv = format!("T{copy}^-1");
                let tpow = |e: i64| -> Vec<String> {
                    let name = if e >= 0 { &t } else { &tinv };
                    std::iter::repeat(name.clone()).take(e.unsigned_abs() as usize).collect()
                };
                let mut w = tpow(exp);
                w.push(a.clone());
                chi.arrow_map.insert(a.as_str().into(), path_el(q, &w)?);
                let mut w = vec![astar.clone()];
                w.extend(tpow(-exp));
                chi.arrow_map.insert(astar.as_str().into(), path_el(q, &w)?);
                let mut w = tpow(-exp);
                w.push(a.clone());
                chi_inv.arrow_map.insert(a.as_str().into(), path_el(q, &w)?);
                let mut w = vec![astar.clone()];
                w.extend(tpow(exp));
                chi_inv.arrow_map.insert(astar.as_str().into(), path_el(q, &w)?);
            }
            OperatorKind::CrispParis(data) => {
                // χ: a ↦ (xy)a, a* ↦ a*(xy)^{-1}, loops conjugated by xy
                let xy: Vec<String> = data
                    .x_word
                    .iter()
                    .chain(data.y_word.iter())
                    .cloned()
                    .collect();
                let xy_inv = data.invert_word(&xy)?;
                let at = |w: &[String]| -> Vec<String> {
                    w.iter().map(|g| indexed(g, copy)).collect()
                };
                let a = format!("a{copy}");
                let astar = format!("a{copy}*");
                let mut w = at(&xy);
                w.push(a.clone());
                chi.arrow_map.insert(a.as_str().into(), path_el(q, &w)?);
                let mut w = vec![astar.clone()];
                w.extend(at(&xy_inv));
                chi.arrow_map.insert(astar.as_str().into(), path_el(q, &w)?);
                let mut w = at(&xy_inv);
                w.push(a.clone());
                chi_inv.arrow_map.insert(a.as_str().into(), path_el(q, &w)?);
                let mut w = vec![astar.clone()];
                w.extend(at(&xy));
                chi_inv.arrow_map.insert(astar.as_str().into(), path_el(q, &w)?);
                for (g, gi) in &data.loops {
                    for name in [g, gi] {
                        let full = indexed(name, copy);
                        let mut w = at(&xy);
                        w.push(full.clone());
                        w.extend(at(&xy_inv));
                        chi.arrow_map.insert(full.as_str().into(), path_el(q, &w)?);
                        let mut w = at(&xy_inv);
                        w.push(full.clone());
                        w.extend(at(&xy));
                        chi_inv.arrow_map.insert(full.as_str().into(), path_el(q, &w)?);
                    }
                }
            }
        }
        Ok(Some((chi, chi_inv)))
    }

    /// The σ-natural coloring θ_λ on copy `copy`, for operators of GMV type.
    pub fn theta_lambda_on_copy(&self, n: usize, copy: usize) -> Result<Option<Substitution>> {
        match &self.kind {
            OperatorKind::Artin | OperatorKind::HumphriesMagnus => Ok(None),
            _ => {
                let pres = self.presentation(n)?;
                let mut theta = Substitution::identity(&pres);
                let a: Sym = format!("a{copy}").as_str().into();
                let astar: Sym = format!("a{copy}*").as_str().into();
                let lam_inv = Scalar::var_pow("lambda", -1);
                let lam = Scalar::var("lambda");
                let ea = theta.arrow_map[&a].scale(&lam_inv);
                let es = theta.arrow_map[&astar].scale(&lam);
                theta.arrow_map.insert(a, ea);
                theta.arrow_map.insert(astar, es);
                Ok(Some(theta))
            }
        }
    }

    /// Dualizability witnesses on A^{(2)}, when the operator has them.
    pub fn dual_data(&self) -> Result<Option<DualData>> {
        let pres = self.presentation(2)?;
        let q = &pres.quiver;
        match &self.kind {
            OperatorKind::HumphriesMagnus => Ok(None),
            OperatorKind::Artin => {
                let id = Substitution::identity(&pres);
                let mut ul = Substitution::identity(&pres);
                let mut ul_inv = Substitution::identity(&pres);
                for (g, img) in [
                    ("x1", vec!["x1", "x2", "x1^-1"]),
                    ("x1^-1", vec!["x1", "x2^-1", "x1^-1"]),
                    ("x2", vec!["x1"]),
                    ("x2^-1", vec!["x1^-1"]),
                ] {
                    ul.arrow_map.insert(
                        g.into(),
                        path_el(q, &img.iter().map(|s| s.to_string()).collect::<Vec<_>>())?,
                    );
                }
                for (g, img) in [
                    ("x1", vec!["x2"]),
                    ("x1^-1", vec!["x2^-1"]),
                    ("x2", vec!["x2^-1", "x1", "x2"]),
                    ("x2^-1", vec!["x2^-1", "x1^-1", "x2"]),
                ] {
                    ul_inv.arrow_map.insert(
                        g.into(),
                        path_el(q, &img.iter().map(|s| s.to_string()).collect::<Vec<_>>())?,
                    );
                }
                Ok(Some(DualData {
                    sigma_u_r: id.clone(),
                    sigma_u_r_inv: id,
                    sigma_u_l: ul,
                    sigma_u_l_inv: ul_inv,
                }))
            }
            OperatorKind::Gmv | OperatorKind::GmvMuCentral | OperatorKind::WadaN(_) => {
                let big_n: i64 = match &self.kind {
                    OperatorKind::WadaN(v) => *v,
                    _ => 1,
                };
                // σ(copy 2) is copy 1 verbatim, so σ_U^R is the identity
                let id = Substitution::identity(&pres);
                let mut ul = Substitution::identity(&pres);
                let mut ul_inv = Substitution::identity(&pres);
                let tpow = |copy: usize, e: i64| -> Vec<String> {
                    let name = if e >= 0 {
                        format!("T{copy}")
                    } else {
                        format!("T{copy}^-1")
                    };
                    std::iter::repeat(name).take(e.unsigned_abs() as usize).collect()
                };
                let set = |s: &mut Substitution, g: String, w: Vec<String>| -> Result<()> {
                    s.arrow_map.insert(g.as_str().into(), path_el(q, &w)?);
                    Ok(())
                };
                let mut w = tpow(1, big_n);
                w.push("a2".into());
                set(&mut ul, "a1".into(), w)?;
                let mut w = vec!["a2*".to_string()];
                w.extend(tpow(1, -big_n));
                set(&mut ul, "a1*".into(), w)?;
                let mut w = tpow(1, big_n);
                w.push("T2".into());
                w.extend(tpow(1, -big_n));
                set(&mut ul, "T1".into(), w)?;
                let mut w = tpow(1, big_n);
                w.push("T2^-1".into());
                w.extend(tpow(1, -big_n));
                set(&mut ul, "T1^-1".into(), w)?;
                set(&mut ul, "a2".into(), vec!["a1".into()])?;
                set(&mut ul, "a2*".into(), vec!["a1*".into()])?;
                set(&mut ul, "T2".into(), vec!["T1".into()])?;
                set(&mut ul, "T2^-1".into(), vec!["T1^-1".into()])?;

                set(&mut ul_inv, "a1".into(), vec!["a2".into()])?;
                set(&mut ul_inv, "a1*".into(), vec!["a2*".into()])?;
                set(&mut ul_inv, "T1".into(), vec!["T2".into()])?;
                set(&mut ul_inv, "T1^-1".into(), vec!["T2^-1".into()])?;
                let mut w = tpow(2, -big_n);
                w.push("a1".into());
                set(&mut ul_inv, "a2".into(), w)?;
                let mut w = vec!["a1*".to_string()];
                w.extend(tpow(2, big_n));
                set(&mut ul_inv, "a2*".into(), w)?;
                let mut w = tpow(2, -big_n);
                w.push("T1".into());
                w.extend(tpow(2, big_n));
                set(&mut ul_inv, "T2".into(), w)?;
                let mut w = tpow(2, -big_n);
                w.push("T1^-1".into());
                w.extend(tpow(2, big_n));
                set(&mut ul_inv, "T2^-1".into(), w)?;
                if matches!(self.kind, OperatorKind::Gmv | OperatorKind::WadaN(_)) {
                    // object maps swap the two free vertices
                    for s in [&mut ul, &mut ul_inv] {
                        s.obj_map.insert("1".into(), "2".into());
                        s.obj_map.insert("2".into(), "1".into());
                    }
                }
                Ok(Some(DualData {
                    sigma_u_r: id.clone(),
                    sigma_u_r_inv: id,
                    sigma_u_l: ul,
                    sigma_u_l_inv: ul_inv,
                }))
            }
            OperatorKind::CrispParis(data) => {
                let x_inv = data.invert_word(&data.x_word)?;
                let y_inv = data.invert_word(&data.y_word)?;
                let at = |w: &[String], copy: usize| -> Vec<String> {
                    w.iter().map(|g| indexed(g, copy)).collect()
                };
                let loops_of = |copy: usize| -> Vec<String> {
                    data.loops
                        .iter()
                        .flat_map(|(g, gi)| [indexed(g, copy), indexed(gi, copy)])
                        .collect()
                };
                let conj = |w: &[String], mid: String, winv: &[String]| -> Vec<String> {
                    let mut out = w.to_vec();
                    out.push(mid);
                    out.extend(winv.to_vec());
                    out
                };
                let mut ur = Substitution::identity(&pres);
                let mut ur_inv = Substitution::identity(&pres);
                let set = |s: &mut Substitution, g: String, w: Vec<String>| -> Result<()> {
                    s.arrow_map
                        .insert(g.as_str().into(), word_or_identity(q, &w, "0")?);
                    Ok(())
                };
                // σ_U^R: copy 1 twisted by y, copy 2 untouched
                let mut w = at(&data.y_word, 1);
                w.push("a1".into());
                set(&mut ur, "a1".into(), w)?;
                let mut w = vec!["a1*".to_string()];
                w.extend(at(&y_inv, 1));
                set(&mut ur, "a1*".into(), w)?;
                for g in loops_of(1) {
                    set(&mut ur, g.clone(), conj(&at(&data.y_word, 1), g, &at(&y_inv, 1)))?;
                }
                let mut w = at(&y_inv, 1);
                w.push("a1".into());
                set(&mut ur_inv, "a1".into(), w)?;
                let mut w = vec!["a1*".to_string()];
                w.extend(at(&data.y_word, 1));
                set(&mut ur_inv, "a1*".into(), w)?;
                for g in loops_of(1) {
                    set(&mut ur_inv, g.clone(), conj(&at(&y_inv, 1), g, &at(&data.y_word, 1)))?;
                }
                // σ_U^L: copy 1 via σ∘i₁, copy 2 folded to copy 1
                let mut ul = Substitution::identity(&pres);
                let mut ul_inv = Substitution::identity(&pres);
                let mut w = at(&data.x_word, 1);
                w.push("a2".into());
                set(&mut ul, "a1".into(), w)?;
                let mut w = vec!["a2*".to_string()];
                w.extend(at(&x_inv, 1));
                set(&mut ul, "a1*".into(), w)?;
                for (g1, g2) in loops_of(1).into_iter().zip(loops_of(2)) {
                    set(&mut ul, g1, conj(&at(&data.x_word, 1), g2, &at(&x_inv, 1)))?;
                }
                set(&mut ul, "a2".into(), vec!["a1".into()])?;
                set(&mut ul, "a2*".into(), vec!["a1*".into()])?;
                for (g2, g1) in loops_of(2).into_iter().zip(loops_of(1)) {
                    set(&mut ul, g2, vec![g1])?;
                }
                set(&mut ul_inv, "a1".into(), vec!["a2".into()])?;
                set(&mut ul_inv, "a1*".into(), vec!["a2*".into()])?;
                for (g1, g2) in loops_of(1).into_iter().zip(loops_of(2)) {
                    set(&mut ul_inv, g1, vec![g2])?;
                }
                let mut w = at(&x_inv, 2);
                w.push("a1".into());
                set(&mut ul_inv, "a2".into(), w)?;
                let mut w = vec!["a1*".to_string()];
                w.extend(at(&data.x_word, 2));
                set(&mut ul_inv, "a2*".into(), w)?;
                for (g2, g1) in loops_of(2).into_iter().zip(loops_of(1)) {
                    set(&mut ul_inv, g2, conj(&at(&x_inv, 2), g1, &at(&data.x_word, 2)))?;
                }
                for s in [&mut ul, &mut ul_inv] {
                    s.obj_map.insert("1".into(), "2".into());
                    s.obj_map.insert("2".into(), "1".into());
                }
                Ok(Some(DualData {
                    sigma_u_r: ur,
                    sigma_u_r_inv: ur_inv,
                    sigma_u_l: ul,
                    sigma_u_l_inv: ul_inv,
                }))
            }
        }
    }

    /// The fold map ∇: A^{(2)} -> A^{(1)}.
    pub fn fold(&self) -> Result<Substitution> {
        let two = self.presentation(2)?;
        let one = self.presentation(1)?;
        let mut s = Substitution::default();
        for o in two.quiver.objects() {
            let img = if one.quiver.has_object(o) {
                o.clone()
            } else {
                // both free vertices collapse onto copy 1's vertex
                "1".into()
            };
            s.obj_map.insert(o.clone(), img);
        }
        for a in two.quiver.arrows() {
            let base = fold_name(a.name.as_str());
            s.arrow_map.insert(
                a.name.clone(),
                Element::path(&one.quiver, Path(vec![base.as_str().into()]))?,
            );
        }
        Ok(s)
    }
}

/// Map a copy-indexed arrow name onto copy 1: "a2*" -> "a1*", "T2^-1" ->
/// "T1^-1", "x2" -> "x1".
pub fn fold_arrow_name(name: &str) -> String {
    fold_name(name)
}

fn fold_name(name: &str) -> String {
    // the copy index is the first digit run in the name
    let mut out = String::new();
    let mut replaced = false;
    for c in name.chars() {
        if c.is_ascii_digit() && !replaced {
            out.push('1');
            replaced = true;
            continue;
        }
        // keep "-1" suffix digits intact
        out.push(c);
    }
    out
}

// ---------------------------------------------------------------------------
// Artin: free groups as one-object quivers with cancellation rules.

fn artin_presentation(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("v")?;
    for j in 1..=n {
        q.add_arrow(format!("x{j}"), "v", "v", 0)?;
        q.add_arrow(format!("x{j}^-1"), "v", "v", 0)?;
    }
    let mut rules = Vec::new();
    for j in 1..=n {
        let x = format!("x{j}");
        let xi = format!("x{j}^-1");
        rules.push(Rule {
            lhs: Path(vec![x.as_str().into(), xi.as_str().into()]),
            rhs: Element::identity("v"),
        });
        rules.push(Rule {
            lhs: Path(vec![xi.as_str().into(), x.as_str().into()]),
            rhs: Element::identity("v"),
        });
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

fn artin_sigma(n: usize, i: usize, positive: bool) -> Result<Substitution> {
    let pres = artin_presentation(n)?;
    let q = &pres.quiver;
    let mut s = Substitution::identity(&pres);
    let x = |j: usize| format!("x{j}");
    let xi = |j: usize| format!("x{j}^-1");
    let mut set = |g: String, w: Vec<String>| -> Result<()> {
        s.arrow_map.insert(g.as_str().into(), path_el(q, &w)?);
        Ok(())
    };
    if positive {
        set(x(i), vec![x(i), x(i + 1), xi(i)])?;
        set(xi(i), vec![x(i), xi(i + 1), xi(i)])?;
        set(x(i + 1), vec![x(i)])?;
        set(xi(i + 1), vec![xi(i)])?;
    } else {
        set(x(i), vec![x(i + 1)])?;
        set(xi(i), vec![xi(i + 1)])?;
        set(x(i + 1), vec![xi(i + 1), x(i), x(i + 1)])?;
        set(xi(i + 1), vec![xi(i + 1), xi(i), x(i + 1)])?;
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// GMV on the localized path category: objects 0,1..n, arrows a_j: j -> 0,
// a_j*: 0 -> j, primitive T_j^{±1}: 0 -> 0 with aa* -> T - e0 and
// cancellation. Wada-N uses the same carrier with T^N twists.

pub fn gmv_presentation(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    for j in 1..=n {
        q.add_object(format!("{j}"))?;
    }
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), format!("{j}"), "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", format!("{j}"), 0)?;
        q.add_arrow(format!("T{j}"), "0", "0", 0)?;
        q.add_arrow(format!("T{j}^-1"), "0", "0", 0)?;
    }
    let e0 = Element::identity("0");
    let mut rules = Vec::new();
    for j in 1..=n {
        let a = format!("a{j}");
        let astar = format!("a{j}*");
        let t = format!("T{j}");
        let tinv = format!("T{j}^-1");
        rules.push(Rule {
            lhs: Path(vec![a.as_str().into(), astar.as_str().into()]),
            rhs: path_el(&q, &[t.clone()])?.sub(&e0)?,
        });
        rules.push(Rule {
            lhs: Path(vec![t.as_str().into(), tinv.as_str().into()]),
            rhs: e0.clone(),
        });
        rules.push(Rule {
            lhs: Path(vec![tinv.as_str().into(), t.as_str().into()]),
            rhs: e0.clone(),
        });
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

fn wada_sigma(n: usize, i: usize, big_n: i64, positive: bool) -> Result<Substitution> {
    let pres = gmv_presentation(n)?;
    let q = &pres.quiver;
    let mut s = Substitution::identity(&pres);
    s.obj_map
        .insert(format!("{i}").as_str().into(), format!("{}", i + 1).as_str().into());
    s.obj_map
        .insert(format!("{}", i + 1).as_str().into(), format!("{i}").as_str().into());
    let tpow = |copy: usize, e: i64| -> Vec<String> {
        let name = if e >= 0 {
            format!("T{copy}")
        } else {
            format!("T{copy}^-1")
        };
        std::iter::repeat(name).take(e.unsigned_abs() as usize).collect()
    };
    let mut set = |g: String, w: Vec<String>| -> Result<()> {
        s.arrow_map.insert(g.as_str().into(), path_el(q, &w)?);
        Ok(())
    };
    let (lo, hi) = (i, i + 1);
    if positive {
        let mut w = tpow(lo, big_n);
        w.push(format!("a{hi}"));
        set(format!("a{lo}"), w)?;
        let mut w = vec![format!("a{hi}*")];
        w.extend(tpow(lo, -big_n));
        set(format!("a{lo}*"), w)?;
        let mut w = tpow(lo, big_n);
        w.push(format!("T{hi}"));
        w.extend(tpow(lo, -big_n));
        set(format!("T{lo}"), w)?;
        let mut w = tpow(lo, big_n);
        w.push(format!("T{hi}^-1"));
        w.extend(tpow(lo, -big_n));
        set(format!("T{lo}^-1"), w)?;
        set(format!("a{hi}"), vec![format!("a{lo}")])?;
        set(format!("a{hi}*"), vec![format!("a{lo}*")])?;
        set(format!("T{hi}"), vec![format!("T{lo}")])?;
        set(format!("T{hi}^-1"), vec![format!("T{lo}^-1")])?;
    } else {
        set(format!("a{lo}"), vec![format!("a{hi}")])?;
        set(format!("a{lo}*"), vec![format!("a{hi}*")])?;
        set(format!("T{lo}"), vec![format!("T{hi}")])?;
        set(format!("T{lo}^-1"), vec![format!("T{hi}^-1")])?;
        let mut w = tpow(hi, -big_n);
        w.push(format!("a{lo}"));
        set(format!("a{hi}"), w)?;
        let mut w = vec![format!("a{lo}*")];
        w.extend(tpow(hi, big_n));
        set(format!("a{hi}*"), w)?;
        let mut w = tpow(hi, -big_n);
        w.push(format!("T{lo}"));
        w.extend(tpow(hi, big_n));
        set(format!("T{hi}"), w)?;
        let mut w = tpow(hi, -big_n);
        w.push(format!("T{lo}^-1"));
        w.extend(tpow(hi, big_n));
        set(format!("T{hi}^-1"), w)?;
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// μ-central GMV: objects {0,1} fixed, same arrow alphabet, quotient rules
// a*a -> (μ-1)e1 completed so that all critical pairs resolve.

pub fn mu_central_presentation(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    q.add_object("1")?;
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), "1", "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", "1", 0)?;
        q.add_arrow(format!("T{j}"), "0", "0", 0)?;
        q.add_arrow(format!("T{j}^-1"), "0", "0", 0)?;
    }
    let rules = mu_central_rules(&q, n)?;
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

/// The shipped μ-central rule family for strands 1..=n. Contains the two
/// orientation rules, the T-absorption rules, T-cancellation, and the
/// quadratic consequences T² = (1+μ)T - μ and T^{-1} = (1+μ^{-1}) - μ^{-1}T
/// needed for local confluence.
pub fn mu_central_rules(q: &GradedQuiver, n: usize) -> Result<Vec<Rule>> {
    let e0 = Element::identity("0");
    let e1 = Element::identity("1");
    let mut rules = Vec::new();
    for j in 1..=n {
        rules.extend(mu_central_rules_for(
            q,
            &e0,
            &e1,
            &format!("a{j}"),
            &format!("a{j}*"),
            &format!("T{j}"),
            &format!("T{j}^-1"),
            &mu(),
        )?);
    }
    Ok(rules)
}

#[allow(clippy::too_many_arguments)]
pub fn mu_central_rules_for(
    q: &GradedQuiver,
    e0: &Element,
    e1: &Element,
    a: &str,
    astar: &str,
    t: &str,
    tinv: &str,
    mu: &Scalar,
) -> Result<Vec<Rule>> {
    let mu_inv = mu.pow(-1)?;
    let t_el = path_el(q, &[t.to_string()])?;
    let a_el = path_el(q, &[a.to_string()])?;
    let astar_el = path_el(q, &[astar.to_string()])?;
    Ok(vec![
        // a*a -> (μ-1) e1
        Rule {
            lhs: Path(vec![astar.into(), a.into()]),
            rhs: e1.scale(&mu.sub(&Scalar::one())),
        },
        // aa* -> T - e0
        Rule {
            lhs: Path(vec![a.into(), astar.into()]),
            rhs: t_el.sub(e0)?,
        },
        // Ta -> μa, a*T -> μa*
        Rule {
            lhs: Path(vec![t.into(), a.into()]),
            rhs: a_el.scale(mu),
        },
        Rule {
            lhs: Path(vec![astar.into(), t.into()]),
            rhs: astar_el.scale(mu),
        },
        // cancellation
        Rule {
            lhs: Path(vec![t.into(), tinv.into()]),
            rhs: e0.clone(),
        },
        Rule {
            lhs: Path(vec![tinv.into(), t.into()]),
            rhs: e0.clone(),
        },
        // T^{-1}a -> μ^{-1}a, a*T^{-1} -> μ^{-1}a*
        Rule {
            lhs: Path(vec![tinv.into(), a.into()]),
            rhs: a_el.scale(&mu_inv),
        },
        Rule {
            lhs: Path(vec![astar.into(), tinv.into()]),
            rhs: astar_el.scale(&mu_inv),
        },
        // TT -> (1+μ)T - μe0 (the quadratic (T-1)(T-μ) = 0)
        Rule {
            lhs: Path(vec![t.into(), t.into()]),
            rhs: t_el
                .scale(&Scalar::one().add(mu))
                .sub(&e0.scale(mu))?,
        },
        // T^{-1} -> (1+μ^{-1})e0 - μ^{-1}T
        Rule {
            lhs: Path(vec![tinv.into()]),
            rhs: e0
                .scale(&Scalar::one().add(&mu_inv))
                .sub(&t_el.scale(&mu_inv))?,
        },
    ])
}

/// The T-eliminated μ-central carrier: arrows a_i, a_i* only, with the
/// quotient rules a_i* a_i -> (μ-1) e_1.
pub fn mu_central_t_free(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    q.add_object("1")?;
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), "1", "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", "1", 0)?;
    }
    let e1 = Element::identity("1");
    let mut rules = Vec::new();
    for j in 1..=n {
        rules.push(Rule {
            lhs: Path(vec![
                format!("a{j}*").as_str().into(),
                format!("a{j}").as_str().into(),
            ]),
            rhs: e1.scale(&mu().sub(&Scalar::one())),
        });
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

fn mu_central_sigma(n: usize, i: usize, positive: bool) -> Result<Substitution> {
    // same generator formulas as GMV; objects 0 and 1 are fixed
    mu_central_from_free(&wada_sigma(n, i, 1, positive)?, n)
}

/// Transport a substitution built over the free GMV carrier into the
/// μ-central quotient: collapse the free vertices onto object 1 and take
/// normal forms of every image. Long words are normalized letter by letter
/// from the right so partial results stay canonical-sized.
pub fn mu_central_from_free(free_sub: &Substitution, n: usize) -> Result<Substitution> {
    mu_central_from_free_filtered(free_sub, n, &|_| true)
}

/// As `mu_central_from_free`, converting only the arrows the caller needs
/// (the T-images of long braids are expensive and usually unused).
pub fn mu_central_from_free_filtered(
    free_sub: &Substitution,
    n: usize,
    keep: &dyn Fn(&Sym) -> bool,
) -> Result<Substitution> {
    let pres = mu_central_presentation(n)?;
    let mut s = Substitution::identity(&pres);
    for (g, img) in &free_sub.arrow_map {
        if !keep(g) {
            s.arrow_map.remove(g);
            continue;
        }
        let src = relabel_obj(img.src());
        let tgt = relabel_obj(img.tgt());
        let mut acc = Element::zero(src.clone(), tgt.clone(), img.deg());
        for (path, coeff) in img.terms() {
            let word = nf_word_incremental(&pres, path, &src)?;
            acc = acc.add(&word.scale(coeff))?;
        }
        s.arrow_map.insert(g.clone(), pres.nf(&acc)?);
    }
    s.scalar_map = free_sub.scalar_map.clone();
    Ok(s)
}

/// Normal form of a single word, folding letters in from the right so every
/// intermediate stays in canonical form.
fn nf_word_incremental(
    pres: &DgPresentation,
    path: &Path,
    src: &Sym,
) -> Result<Element> {
    let mut acc = Element::identity(src.clone());
    for letter in path.0.iter().rev() {
        let l = Element::path(&pres.quiver, Path(vec![letter.clone()]))?;
        acc = pres.nf(&l.mul(&acc)?)?;
    }
    Ok(acc)
}

/// Objects 2..n of the free GMV carrier all become object 1 here.
fn relabel_obj(o: &Sym) -> Sym {
    if o.as_str() == "0" {
        o.clone()
    } else {
        "1".into()
    }
}

// ---------------------------------------------------------------------------
// Humphries-Magnus: the free algebra on a_ij (i ≠ j), one object.

fn hm_presentation(n: usize) -> Result<DgPresentation> {
    if n > 9 {
        return Err(Error::Unsupported(
            "Humphries-Magnus carrier limited to n ≤ 9".into(),
        ));
    }
    let mut q = GradedQuiver::new();
    q.add_object("v")?;
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                q.add_arrow(format!("a{i}{j}"), "v", "v", 0)?;
            }
        }
    }
    DgPresentation::new(q, RewriteSystem::empty(), BTreeMap::new())
}

fn hm_sigma(n: usize, k: usize, positive: bool) -> Result<Substitution> {
    let pres = hm_presentation(n)?;
    let q = &pres.quiver;
    let mut s = Substitution::identity(&pres);
    let a = |i: usize, j: usize| format!("a{i}{j}");
    let single = |name: String| path_el(q, &[name]);
    let (lo, hi) = (k, k + 1);
    if positive {
        for i in 1..=n {
            if i == lo || i == hi {
                continue;
            }
            // a_{ki} -> a_{k+1,i} - a_{k+1,k} a_{ki}
            s.arrow_map.insert(
                a(lo, i).as_str().into(),
                single(a(hi, i))?.sub(&path_el(q, &[a(hi, lo), a(lo, i)])?)?,
            );
            // a_{ik} -> a_{i,k+1} - a_{ik} a_{k,k+1}
            s.arrow_map.insert(
                a(i, lo).as_str().into(),
                single(a(i, hi))?.sub(&path_el(q, &[a(i, lo), a(lo, hi)])?)?,
            );
            s.arrow_map.insert(a(hi, i).as_str().into(), single(a(lo, i))?);
            s.arrow_map.insert(a(i, hi).as_str().into(), single(a(i, lo))?);
        }
        s.arrow_map
            .insert(a(lo, hi).as_str().into(), single(a(hi, lo))?.neg());
        s.arrow_map
            .insert(a(hi, lo).as_str().into(), single(a(lo, hi))?.neg());
    } else {
        for i in 1..=n {
            if i == lo || i == hi {
                continue;
            }
            s.arrow_map.insert(a(lo, i).as_str().into(), single(a(hi, i))?);
            s.arrow_map.insert(a(i, lo).as_str().into(), single(a(i, hi))?);
            // a_{k+1,i} -> a_{ki} - a_{k,k+1} a_{k+1,i}
            s.arrow_map.insert(
                a(hi, i).as_str().into(),
                single(a(lo, i))?.sub(&path_el(q, &[a(lo, hi), a(hi, i)])?)?,
            );
            // a_{i,k+1} -> a_{ik} - a_{i,k+1} a_{k+1,k}
            s.arrow_map.insert(
                a(i, hi).as_str().into(),
                single(a(i, lo))?.sub(&path_el(q, &[a(i, hi), a(hi, lo)])?)?,
            );
        }
        s.arrow_map
            .insert(a(lo, hi).as_str().into(), single(a(hi, lo))?.neg());
        s.arrow_map
            .insert(a(hi, lo).as_str().into(), single(a(lo, hi))?.neg());
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// Crisp-Paris: vertex j --a_j--> 0 with a free product of coefficient
// algebras at 0, braid action twisting by the designated x and y.

fn cp_word(q: &GradedQuiver, word: &[String], copy: usize, obj: &str) -> Result<Element> {
    let names: Vec<String> = word.iter().map(|g| indexed(g, copy)).collect();
    word_or_identity(q, &names, obj)
}

fn cp_presentation(data: &CpData, n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    for j in 1..=n {
        q.add_object(format!("{j}"))?;
    }
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), format!("{j}"), "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", format!("{j}"), 0)?;
        for (g, gi) in &data.loops {
            q.add_arrow(indexed(g, j), "0", "0", 0)?;
            q.add_arrow(indexed(gi, j), "0", "0", 0)?;
        }
    }
    let e0 = Element::identity("0");
    let mut rules = Vec::new();
    for j in 1..=n {
        for (g, gi) in &data.loops {
            rules.push(Rule {
                lhs: Path(vec![
                    indexed(g, j).as_str().into(),
                    indexed(gi, j).as_str().into(),
                ]),
                rhs: e0.clone(),
            });
            rules.push(Rule {
                lhs: Path(vec![
                    indexed(gi, j).as_str().into(),
                    indexed(g, j).as_str().into(),
                ]),
                rhs: e0.clone(),
            });
        }
        for template in &data.relations {
            let lhs: Vec<Sym> = template
                .lhs
                .iter()
                .map(|t| Sym::from(instantiate(t, j).as_str()))
                .collect();
            let lhs = Path(lhs);
            let (src, tgt, deg) = lhs.typecheck(&q)?;
            let mut rhs = Element::zero(src.clone(), tgt.clone(), deg);
            for (c, w) in &template.rhs {
                let names: Vec<String> = w.iter().map(|t| instantiate(t, j)).collect();
                let el = if names.is_empty() {
                    if src != tgt {
                        return Err(Error::EndpointMismatch(
                            "identity term in non-endomorphism rule template".into(),
                        ));
                    }
                    Element::identity(src.clone())
                } else {
                    path_el(&q, &names)?
                };
                rhs = rhs.add(&el.scale(c))?;
            }
            rules.push(Rule { lhs, rhs });
        }
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

fn instantiate(token: &str, copy: usize) -> String {
    if token == "a" {
        format!("a{copy}")
    } else if token == "a*" {
        format!("a{copy}*")
    } else {
        indexed(token, copy)
    }
}

/// Attach a copy index to a one-copy name, keeping `^-1` suffixes intact:
/// ("T", 2) -> "T2", ("T^-1", 2) -> "T2^-1".
fn indexed(base: &str, copy: usize) -> String {
    match base.strip_suffix("^-1") {
        Some(stem) => format!("{stem}{copy}^-1"),
        None => format!("{base}{copy}"),
    }
}

fn cp_sigma(data: &CpData, n: usize, i: usize, positive: bool) -> Result<Substitution> {
    let pres = cp_presentation(data, n)?;
    let q = &pres.quiver;
    let mut s = Substitution::identity(&pres);
    s.obj_map
        .insert(format!("{i}").as_str().into(), format!("{}", i + 1).as_str().into());
    s.obj_map
        .insert(format!("{}", i + 1).as_str().into(), format!("{i}").as_str().into());
    let x_inv = data.invert_word(&data.x_word)?;
    let y_inv = data.invert_word(&data.y_word)?;
    let at = |w: &[String], copy: usize| -> Vec<String> {
        w.iter().map(|g| indexed(g, copy)).collect()
    };
    let loops_of = |copy: usize| -> Vec<String> {
        data.loops
            .iter()
            .flat_map(|(g, gi)| [indexed(g, copy), indexed(gi, copy)])
            .collect()
    };
    let mut set = |g: String, w: Vec<String>| -> Result<()> {
        s.arrow_map.insert(g.as_str().into(), word_or_identity(q, &w, "0")?);
        Ok(())
    };
    let (lo, hi) = (i, i + 1);
    if positive {
        // a_k -> x_k a_{k+1}, a_{k+1} -> y_k a_k, loops conjugated
        let mut w = at(&data.x_word, lo);
        w.push(format!("a{hi}"));
        set(format!("a{lo}"), w)?;
        let mut w = vec![format!("a{hi}*")];
        w.extend(at(&x_inv, lo));
        set(format!("a{lo}*"), w)?;
        let mut w = at(&data.y_word, lo);
        w.push(format!("a{lo}"));
        set(format!("a{hi}"), w)?;
        let mut w = vec![format!("a{lo}*")];
        w.extend(at(&y_inv, lo));
        set(format!("a{hi}*"), w)?;
        for (glo, ghi) in loops_of(lo).into_iter().zip(loops_of(hi)) {
            let mut w = at(&data.x_word, lo);
            w.push(ghi.clone());
            w.extend(at(&x_inv, lo));
            set(glo, w)?;
            let mut w = at(&data.y_word, lo);
            w.push(fold_to_copy(&ghi, lo));
            w.extend(at(&y_inv, lo));
            set(ghi, w)?;
        }
    } else {
        // the derived inverse formulas
        let mut w = at(&y_inv, hi);
        w.push(format!("a{hi}"));
        set(format!("a{lo}"), w)?;
        let mut w = vec![format!("a{hi}*")];
        w.extend(at(&data.y_word, hi));
        set(format!("a{lo}*"), w)?;
        let mut pre = at(&y_inv, hi);
        pre.extend(at(&x_inv, hi));
        pre.extend(at(&data.y_word, hi));
        let mut post = at(&y_inv, hi);
        post.extend(at(&data.x_word, hi));
        post.extend(at(&data.y_word, hi));
        let mut w = pre.clone();
        w.push(format!("a{lo}"));
        set(format!("a{hi}"), w)?;
        let mut w = vec![format!("a{lo}*")];
        w.extend(post.clone());
        set(format!("a{hi}*"), w)?;
        for (glo, ghi) in loops_of(lo).into_iter().zip(loops_of(hi)) {
            let mut w = at(&y_inv, hi);
            w.push(ghi.clone());
            w.extend(at(&data.y_word, hi));
            set(glo, w)?;
            let mut w = pre.clone();
            w.push(fold_to_copy(&ghi, lo));
            w.extend(post.clone());
            set(ghi, w)?;
        }
    }
    Ok(s)
}

/// Rename a copy-indexed loop name onto another copy.
fn fold_to_copy(name: &str, copy: usize) -> String {
    let mut out = String::new();
    let mut replaced = false;
    for c in name.chars() {
        if c.is_ascii_digit() && !replaced {
            out.push_str(&copy.to_string());
            replaced = true;
            continue;
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names() {
        assert!(catalog_operator("artin").is_ok());
        assert!(catalog_operator("gmv").is_ok());
        assert!(catalog_operator("gmv_mu_central").is_ok());
        assert!(catalog_operator("wada_n(2)").is_ok());
        assert!(catalog_operator("wada_n(-2)").is_ok());
        assert!(catalog_operator("crisp_paris").is_ok());
        assert!(catalog_operator("humphries_magnus").is_ok());
        assert!(catalog_operator("nonsense").is_err());
    }

    #[test]
    fn gmv_sigma_on_a1() {
        let op = catalog_operator("gmv").unwrap();
        let pres = op.presentation(2).unwrap();
        let s = op.sigma(2, 1).unwrap();
        let a1 = pres.gen("a1").unwrap();
        let img = s.apply(&a1, &pres).unwrap();
        let want = path_el(&pres.quiver, &["T1".into(), "a2".into()]).unwrap();
        assert_eq!(img, want);
    }

    #[test]
    fn gmv_sigma_inverse_roundtrip() {
        let op = catalog_operator("gmv").unwrap();
        let pres = op.presentation(3).unwrap();
        let s = op.sigma(3, 1).unwrap();
        let sinv = op.sigma_inv(3, 1).unwrap();
        let both = s.compose(&sinv, &pres).unwrap();
        let id = Substitution::identity(&pres);
        assert!(both.agrees_with(&id, &pres, &pres).unwrap());
        let both = sinv.compose(&s, &pres).unwrap();
        assert!(both.agrees_with(&id, &pres, &pres).unwrap());
    }

    #[test]
    fn gmv_fixes_far_generators() {
        let op = catalog_operator("gmv").unwrap();
        let pres = op.presentation(3).unwrap();
        let s = op.sigma(3, 1).unwrap();
        let a3 = pres.gen("a3").unwrap();
        assert_eq!(s.apply(&a3, &pres).unwrap(), a3);
    }

    #[test]
    fn mu_central_absorption() {
        let pres = mu_central_presentation(1).unwrap();
        let ta = pres
            .nf(&path_el(&pres.quiver, &["T1".into(), "a1".into()]).unwrap())
            .unwrap();
        assert_eq!(ta, pres.gen("a1").unwrap().scale(&mu()));
        let astar_a = pres
            .nf(&path_el(&pres.quiver, &["a1*".into(), "a1".into()]).unwrap())
            .unwrap();
        assert_eq!(
            astar_a,
            Element::identity("1").scale(&mu().sub(&Scalar::one()))
        );
    }

    #[test]
    fn mu_central_sigma_respects_rules() {
        let op = catalog_operator("gmv_mu_central").unwrap();
        let pres = op.presentation(2).unwrap();
        let s = op.sigma(2, 1).unwrap();
        assert!(s.respects_rules(&pres, &pres).unwrap().is_empty());
    }

    #[test]
    fn gmv_sigma_respects_rules() {
        let op = catalog_operator("gmv").unwrap();
        let pres = op.presentation(2).unwrap();
        for s in [op.sigma(2, 1).unwrap(), op.sigma_inv(2, 1).unwrap()] {
            assert!(s.respects_rules(&pres, &pres).unwrap().is_empty());
        }
    }

    #[test]
    fn braid_endo_identity() {
        let op = catalog_operator("gmv").unwrap();
        let b = BraidWord::identity(3);
        let pres = op.presentation(3).unwrap();
        let endo = op.braid_action_endo(&b).unwrap();
        assert!(endo
            .agrees_with(&Substitution::identity(&pres), &pres, &pres)
            .unwrap());
    }

    #[test]
    fn artin_sigma_squared() {
        let op = catalog_operator("artin").unwrap();
        let pres = op.presentation(2).unwrap();
        let s = op.sigma(2, 1).unwrap();
        let ss = s.compose(&s, &pres).unwrap();
        let x1 = pres.gen("x1").unwrap();
        let img = ss.apply(&x1, &pres).unwrap();
        let want = path_el(
            &pres.quiver,
            &[
                "x1".into(),
                "x2".into(),
                "x1".into(),
                "x2^-1".into(),
                "x1^-1".into(),
            ],
        )
        .unwrap();
        assert_eq!(img, want);
    }

    #[test]
    fn crisp_paris_shipped_equals_gmv() {
        let cp = catalog_operator("crisp_paris").unwrap();
        let gmv = catalog_operator("gmv").unwrap();
        let pres = gmv.presentation(3).unwrap();
        for i in 1..=2 {
            for positive in [true, false] {
                let a = cp.sigma_signed(3, i, positive).unwrap();
                let b = gmv.sigma_signed(3, i, positive).unwrap();
                assert!(a.agrees_with(&b, &pres, &pres).unwrap());
            }
        }
    }

    #[test]
    fn wada_one_equals_gmv() {
        let w1 = catalog_operator("wada_n(1)").unwrap();
        let gmv = catalog_operator("gmv").unwrap();
        let pres = gmv.presentation(3).unwrap();
        for i in 1..=2 {
            let a = w1.sigma(3, i).unwrap();
            let b = gmv.sigma(3, i).unwrap();
            assert!(a.agrees_with(&b, &pres, &pres).unwrap());
        }
    }
}
