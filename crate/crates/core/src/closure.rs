//! Braid closure constructions: the categorical closure, the writhe-adjusted
//! twisted action Ψ, the semi-free resolution B and its cylinder, the knot
//! DG category (by the explicit colimit and by its closed form), the
//! endomorphism DGA at the distinguished object, the degree-0 homology
//! presentation, and the fully noncommutative link DG category.

use crate::braid::BraidWord;
use crate::dg::DgPresentation;
use crate::element::Element;
use crate::group::{GroupPresentation, Word};
use crate::operators::{mu_central_presentation, YbOperator};
use crate::quiver::{GradedQuiver, Path, Sym};
use crate::rewrite::{Rule, RewriteSystem};
use crate::scalar::Scalar;
use crate::subst::Substitution;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Output of a categorical braid closure.
#[derive(Clone, Debug)]
pub enum ClosurePresentation {
    /// Generators x1..xn with relators β(x_i) x_i^{-1}.
    Group(GroupPresentation),
    /// Generators of A^{(n)} with relations β(g) - g.
    Category {
        presentation: DgPresentation,
        relations: Vec<(Sym, Element)>,
    },
}

/// The coequalizer of β and the identity on A^{(n)}.
pub fn categorical_closure(op: &YbOperator, b: &BraidWord) -> Result<ClosurePresentation> {
    let n = b.strand_count();
    let pres = op.presentation(n)?;
    let endo = op.braid_action_endo(b)?;
    if op.name == "artin" {
        let mut relators = Vec::new();
        for j in 1..=n {
            let x = pres.gen(&format!("x{j}"))?;
            let img = endo.apply(&x, &pres)?;
            let mut word = single_path_word(&img)?;
            word.0.push(-(j as i32));
            relators.push(word.free_reduce());
        }
        return Ok(ClosurePresentation::Group(GroupPresentation::new(
            n, relators,
        )));
    }
    let mut relations = Vec::new();
    for a in pres.quiver.arrows() {
        let g = Element::path(&pres.quiver, Path(vec![a.name.clone()]))?;
        // the image has the endpoints of the permuted generator; a relation
        // β(g) - g only makes sense when the closure identifies them, which
        // is exactly what the coequalizer records
        let img = endo.apply(&g, &pres)?;
        let rel = if img.src() == g.src() && img.tgt() == g.tgt() {
            img.sub(&g)?
        } else {
            // keep the pair as a formal difference by recording the image;
            // consumers treat (name, image) as the relation β(g) = g
            img
        };
        relations.push((a.name.clone(), rel));
    }
    Ok(ClosurePresentation::Category {
        presentation: pres,
        relations,
    })
}

fn single_path_word(e: &Element) -> Result<Word> {
    let mut terms = e.terms();
    let (path, coeff) = terms
        .next()
        .ok_or_else(|| Error::Parse("empty group element".into()))?;
    if terms.next().is_some() || !coeff.is_one() {
        return Err(Error::Parse(format!("not a group word: {e}")));
    }
    Word::from_artin_path(path)
}

/// Ψ = β ∘ (θ χ^{-w} ⨿ id^{(n-1)}), the writhe-adjusted (optionally colored)
/// action map. Requires a knot closure; the plain categorical closure covers
/// the multi-component case.
pub fn writhe_adjusted_psi(
    op: &YbOperator,
    b: &BraidWord,
    colored: bool,
) -> Result<Substitution> {
    let orbits = b.strand_orbits();
    if orbits.component_count() != 1 {
        return Err(Error::MultiComponent(orbits.component_count()));
    }
    let n = b.strand_count();
    if matches!(op.kind, crate::operators::OperatorKind::GmvMuCentral) {
        // compose in the free GMV carrier, where every image is monomial,
        // and pass to the quotient once at the end
        let free = crate::operators::catalog_operator("gmv")?;
        let psi = writhe_adjusted_psi(&free, b, colored)?;
        // only the a-type images feed the DG constructions; T-images of
        // long braids are large and never consumed
        return crate::operators::mu_central_from_free_filtered(&psi, n, &|g| {
            g.as_str().starts_with('a')
        });
    }
    let pres = op.presentation(n)?;
    let w = b.writhes().total;
    let (chi, chi_inv) = op
        .torsion_on_copy(n, 1)?
        .ok_or_else(|| Error::Unsupported(format!("operator {} has no torsion", op.name)))?;
    let mut twist = Substitution::identity(&pres);
    let step = if w >= 0 { &chi_inv } else { &chi };
    for _ in 0..w.unsigned_abs() {
        twist = step.compose(&twist, &pres)?;
    }
    if colored {
        let theta = op
            .theta_lambda_on_copy(n, 1)?
            .ok_or_else(|| Error::Unsupported(format!("operator {} has no coloring", op.name)))?;
        twist = theta.compose(&twist, &pres)?;
    }
    let endo = op.braid_action_endo(b)?;
    endo.compose(&twist, &pres)
}

/// The semi-free resolution B of the one-strand μ-central category:
/// arrows a: 1 -> 0, a*: 0 -> 1 in degree 0 and ξ: 1 -> 1 in degree 1 with
/// dξ = a*a - (μ-1)e_1. Returns B together with the projection p: B -> A,
/// using the paper's unindexed generator names.
pub fn resolution_b() -> Result<(DgPresentation, Substitution)> {
    resolution_b_impl(1, false)
}

/// The n-fold coproduct B^{(n)} with its projection p^{(n)} onto the
/// μ-central A^{(n)} (T kept primitive in the target). Generators carry
/// copy indices for every n, including n = 1.
pub fn resolution_b_n(n: usize) -> Result<(DgPresentation, Substitution)> {
    resolution_b_impl(n, true)
}

fn resolution_b_impl(n: usize, indexed: bool) -> Result<(DgPresentation, Substitution)> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    q.add_object("1")?;
    let suffix = |j: usize| -> String {
        if indexed {
            j.to_string()
        } else {
            String::new()
        }
    };
    for j in 1..=n {
        let s = suffix(j);
        q.add_arrow(format!("a{s}"), "1", "0", 0)?;
        q.add_arrow(format!("a{s}*"), "0", "1", 0)?;
        q.add_arrow(format!("xi{s}"), "1", "1", 1)?;
    }
    let mut diff = BTreeMap::new();
    for j in 1..=n {
        let s = suffix(j);
        let astar_a = Element::path(&q, Path(vec![format!("a{s}*").as_str().into(), format!("a{s}").as_str().into()]))?;
        let dxi = astar_a.sub(&Element::identity("1").scale(&Scalar::var("mu").sub(&Scalar::one())))?;
        diff.insert(format!("xi{s}").as_str().into(), dxi);
    }
    let bpres = DgPresentation::new(q, RewriteSystem::empty(), diff)?;
    let target = mu_central_presentation(n)?;
    let mut p = Substitution::default();
    p.obj_map.insert("0".into(), "0".into());
    p.obj_map.insert("1".into(), "1".into());
    for j in 1..=n {
        let s = suffix(j);
        p.arrow_map.insert(
            format!("a{s}").as_str().into(),
            target.gen(&format!("a{j}"))?,
        );
        p.arrow_map.insert(
            format!("a{s}*").as_str().into(),
            target.gen(&format!("a{j}*"))?,
        );
        p.arrow_map.insert(
            format!("xi{s}").as_str().into(),
            Element::zero("1", "1", 1),
        );
    }
    Ok((bpres, p))
}

/// Cylinder naming convention for the resolution: a -> b, xi -> eta, with
/// primes for the second copy.
pub fn cylinder_names(pres: &DgPresentation) -> (BTreeMap<Sym, Sym>, BTreeMap<Sym, Sym>) {
    let mut prime = BTreeMap::new();
    let mut shift = BTreeMap::new();
    for a in pres.quiver.arrows() {
        let name = a.name.as_str();
        prime.insert(a.name.clone(), format!("{name}'").as_str().into());
        let shifted = if let Some(rest) = name.strip_prefix("xi") {
            format!("eta{rest}")
        } else if let Some(rest) = name.strip_prefix('a') {
            format!("b{rest}")
        } else {
            format!("s{name}")
        };
        shift.insert(a.name.clone(), shifted.as_str().into());
    }
    (prime, shift)
}

/// A link DG category presentation with its bookkeeping.
#[derive(Clone, Debug)]
pub struct LinkDgCategory {
    pub pres: DgPresentation,
    pub base_object: Sym,
    pub component_objects: Vec<Sym>,
    /// (lambda_i, mu_i) scalar names per component.
    pub params: Vec<(String, String)>,
    pub marked_strands: Vec<usize>,
    /// Component index of each strand (0-based, strand j at index j-1).
    pub strand_component: Vec<usize>,
    pub component_writhes: Vec<i64>,
}

/// The quiver of the knot DG category: a_i, a_i* in degree 0, b_i, b_i* in
/// degree 1, η_i in degree 2, relations a_i* a_i = (μ-1) e_1.
fn knot_dg_target(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    q.add_object("1")?;
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), "1", "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", "1", 0)?;
    }
    for j in 1..=n {
        q.add_arrow(format!("b{j}"), "1", "0", 1)?;
        q.add_arrow(format!("b{j}*"), "0", "1", 1)?;
    }
    for j in 1..=n {
        q.add_arrow(format!("eta{j}"), "1", "1", 2)?;
    }
    let mut rules = Vec::new();
    let mu1 = Scalar::var("mu").sub(&Scalar::one());
    for j in 1..=n {
        rules.push(Rule {
            lhs: Path(vec![
                format!("a{j}*").as_str().into(),
                format!("a{j}").as_str().into(),
            ]),
            rhs: Element::identity("1").scale(&mu1),
        });
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

/// T-elimination: the substitution sending the T-primitive μ-central A^{(n)}
/// into a T-free target, with T_i ↦ e_0 + a_i a_i* and
/// T_i^{-1} ↦ e_0 - μ^{-1} a_i a_i*.
fn expand_t(
    source: &DgPresentation,
    target: &DgPresentation,
    obj_map: &BTreeMap<Sym, Sym>,
    mu_of_strand: &dyn Fn(usize) -> Scalar,
) -> Result<Substitution> {
    let mut s = Substitution::default();
    s.obj_map = obj_map.clone();
    let e0 = Element::identity("0");
    for a in source.quiver.arrows() {
        let name = a.name.as_str();
        if let Some(idx) = name.strip_prefix('T') {
            let (j, inverse) = match idx.strip_suffix("^-1") {
                Some(j) => (j, true),
                None => (idx, false),
            };
            let j: usize = j.parse().map_err(|_| Error::Parse(name.to_string()))?;
            let aa = Element::path(
                &target.quiver,
                Path(vec![
                    format!("a{j}").as_str().into(),
                    format!("a{j}*").as_str().into(),
                ]),
            )?;
            let img = if inverse {
                e0.sub(&aa.scale(&mu_of_strand(j).pow(-1)?))?
            } else {
                e0.add(&aa)?
            };
            s.arrow_map.insert(a.name.clone(), img);
        } else {
            s.arrow_map
                .insert(a.name.clone(), target.gen(name)?);
        }
    }
    Ok(s)
}

fn knot_writhe_check(b: &BraidWord) -> Result<()> {
    let orbits = b.strand_orbits();
    if orbits.component_count() != 1 {
        return Err(Error::MultiComponent(orbits.component_count()));
    }
    Ok(())
}

/// Expand one free-carrier word into a T-free target, folding letters in
/// from the right. T_j folds as e_0 + a_j a_j*, its inverse as
/// e_0 - μ_j^{-1} a_j a_j*.
///
/// The only rewrite rule of the target sends a_j* a_j to a scalar, so
/// prepending a factor can only contract at the junction; partial results
/// stay normal without generic rewriting.
fn fold_expand_word(
    target: &DgPresentation,
    path: &Path,
    empty_obj: &Sym,
    mu_of_strand: &dyn Fn(usize) -> Scalar,
) -> Result<Element> {
    // factor kinds: a single letter, or e0 + c·a_j a_j*
    enum Factor {
        Letter(Sym),
        TPower { j: usize, coeff: Scalar },
    }
    let mut terms: BTreeMap<Path, Scalar> = BTreeMap::new();
    terms.insert(Path::empty(), Scalar::one());
    let star_of = |j: usize| -> Sym { format!("a{j}*").as_str().into() };
    let plain_of = |j: usize| -> Sym { format!("a{j}").as_str().into() };
    let strand_of = |name: &Sym| -> Option<usize> {
        let s = name.as_str().strip_prefix('a')?;
        s.strip_suffix('*').unwrap_or(s).parse().ok()
    };
    // prepend one letter to a normal word, contracting a_j* a_j pairs
    let prepend = |letter: &Sym, word: &Path, coeff: &Scalar| -> (Path, Scalar) {
        let mut stack: Vec<Sym> = vec![letter.clone()];
        let mut rest = word.0.as_slice();
        let mut c = coeff.clone();
        loop {
            let (Some(last), Some(first)) = (stack.last(), rest.first()) else {
                break;
            };
            let contract = match (strand_of(last), strand_of(first)) {
                (Some(j), Some(k)) if j == k => {
                    last.as_str().ends_with('*') && !first.as_str().ends_with('*')
                }
                _ => false,
            };
            if !contract {
                break;
            }
            let j = strand_of(last).unwrap();
            c = c.mul(&mu_of_strand(j).sub(&Scalar::one()));
            stack.pop();
            rest = &rest[1..];
        }
        let mut v = stack;
        v.extend_from_slice(rest);
        (Path(v), c)
    };
    for letter in path.0.iter().rev() {
        let name = letter.as_str();
        let factor = if let Some(idx) = name.strip_prefix('T') {
            let (js, inverse) = match idx.strip_suffix("^-1") {
                Some(j) => (j, true),
                None => (idx, false),
            };
            let j: usize = js.parse().map_err(|_| Error::Parse(name.to_string()))?;
            let coeff = if inverse {
                mu_of_strand(j).pow(-1)?.neg()
            } else {
                Scalar::one()
            };
            Factor::TPower { j, coeff }
        } else {
            Factor::Letter(letter.clone())
        };
        let mut next: BTreeMap<Path, Scalar> = BTreeMap::new();
        let mut push = |p: Path, c: Scalar| {
            if c.is_zero() {
                return;
            }
            let entry = next.entry(p).or_insert_with(Scalar::zero);
            *entry = entry.add(&c);
        };
        for (word, coeff) in &terms {
            match &factor {
                Factor::Letter(l) => {
                    let (p, c) = prepend(l, word, coeff);
                    push(p, c);
                }
                Factor::TPower { j, coeff: tc } => {
                    // identity part
                    push(word.clone(), coeff.clone());
                    // c · a_j a_j* part
                    let (p1, c1) = prepend(&star_of(*j), word, &coeff.mul(tc));
                    let (p2, c2) = prepend(&plain_of(*j), &p1, &c1);
                    push(p2, c2);
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        terms = next;
    }
    let out = terms;
    if path.is_empty() {
        return Ok(Element::identity(empty_obj.clone()));
    }
    // endpoints from the original free-carrier word are supplied by caller
    // context; rebuild and validate against the target quiver
    let mut first_nonempty = None;
    for (p, _) in &out {
        if !p.is_empty() {
            first_nonempty = Some(p.clone());
            break;
        }
    }
    let (src, tgt) = match first_nonempty {
        Some(p) => {
            let (s, t, _) = p.typecheck(&target.quiver)?;
            (s, t)
        }
        None => (empty_obj.clone(), empty_obj.clone()),
    };
    Element::from_terms(&target.quiver, src, tgt, 0, out)
}

/// Fold-expand every term of a free-carrier element.
fn fold_expand_element(
    target: &DgPresentation,
    e: &Element,
    obj_map: &BTreeMap<Sym, Sym>,
    mu_of_strand: &dyn Fn(usize) -> Scalar,
) -> Result<Element> {
    let src = obj_map
        .get(e.src())
        .cloned()
        .unwrap_or_else(|| e.src().clone());
    let tgt = obj_map
        .get(e.tgt())
        .cloned()
        .unwrap_or_else(|| e.tgt().clone());
    let mut out = Element::zero(src.clone(), tgt, e.deg());
    for (p, c) in e.terms() {
        let word = fold_expand_word(target, p, &src, mu_of_strand)?;
        out.accumulate(&word.scale(c))?;
    }
    target.nf(&out)
}

/// Diagnostic: report T-free image sizes and timings.
pub fn debug_t_free_images(b: &BraidWord) -> Result<()> {
    let tfree = crate::operators::mu_central_t_free(b.strand_count())?;
    let t0 = std::time::Instant::now();
    let images = t_free_psi_images(b, &tfree)?;
    for (g, img) in &images {
        println!("  {g}: {} terms", img.num_terms());
    }
    println!("  ({:?})", t0.elapsed());
    Ok(())
}

/// Product of two T-free normal elements. Only boundary contractions can
/// fire (the single rule rewrites a_j* a_j to a scalar), so this runs in
/// time proportional to the output size instead of a generic rewrite pass.
fn tfree_boundary_mul(
    target: &DgPresentation,
    left: &Element,
    right: &Element,
) -> Result<Element> {
    let strand_of = |name: &Sym| -> Option<(usize, bool)> {
        let s = name.as_str().strip_prefix('a')?;
        match s.strip_suffix('*') {
            Some(t) => t.parse().ok().map(|j| (j, true)),
            None => s.parse().ok().map(|j| (j, false)),
        }
    };
    let mu = Scalar::var("mu");
    let mut terms: BTreeMap<Path, Scalar> = BTreeMap::new();
    for (lp, lc) in left.terms() {
        for (rp, rc) in right.terms() {
            let mut stack: Vec<Sym> = lp.0.clone();
            let mut rest = rp.0.as_slice();
            let mut c = lc.mul(rc);
            loop {
                let (Some(last), Some(first)) = (stack.last(), rest.first()) else {
                    break;
                };
                match (strand_of(last), strand_of(first)) {
                    (Some((j, true)), Some((k, false))) if j == k => {
                        c = c.mul(&mu.sub(&Scalar::one()));
                        stack.pop();
                        rest = &rest[1..];
                    }
                    _ => break,
                }
            }
            stack.extend_from_slice(rest);
            let entry = terms.entry(Path(stack)).or_insert_with(Scalar::zero);
            *entry = entry.add(&c);
        }
    }
    terms.retain(|_, v| !v.is_zero());
    Element::from_terms(
        &target.quiver,
        right.src().clone(),
        left.tgt().clone(),
        left.deg() + right.deg(),
        terms,
    )
}

/// The T-free images of Ψ on the a-type generators, computed in the
/// monomial free carrier and expanded by right folds.
fn t_free_psi_images(
    b: &BraidWord,
    target: &DgPresentation,
) -> Result<BTreeMap<Sym, Element>> {
    let n = b.strand_count();
    let free = crate::operators::catalog_operator("gmv")?;
    let psi = writhe_adjusted_psi(&free, b, true)?;
    let mut objs = BTreeMap::new();
    objs.insert(Sym::from("0"), Sym::from("0"));
    for j in 1..=n {
        objs.insert(
            Sym::from(format!("{j}").as_str()),
            Sym::from("1"),
        );
    }
    let mu = |_: usize| Scalar::var("mu");
    let mut out = BTreeMap::new();
    for j in 1..=n {
        for name in [format!("a{j}"), format!("a{j}*")] {
            let key = Sym::from(name.as_str());
            let img = &psi.arrow_map[&key];
            out.insert(key, fold_expand_element(target, img, &objs, &mu)?);
        }
    }
    Ok(out)
}

fn link_dg_from_differentials(
    pres: DgPresentation,
    b: &BraidWord,
    components: Vec<Sym>,
    params: Vec<(String, String)>,
) -> Result<LinkDgCategory> {
    let orbits = b.strand_orbits();
    let writhes = b.writhes();
    let dd = pres.check_d_squared()?;
    if !dd.pass() {
        let (g, r) = &dd.gen_failures[0];
        return Err(Error::ResidueNotExpressible(format!(
            "d² ≠ 0 on {g}: residue {r}"
        )));
    }
    Ok(LinkDgCategory {
        pres,
        base_object: "0".into(),
        component_objects: components,
        params,
        marked_strands: orbits.marked_strands(),
        strand_component: orbits.component_of.clone(),
        component_writhes: writhes.per_component,
    })
}

/// The knot DG category by its closed-form presentation:
/// d(b_i) = Ψ(a_i) - a_i, d(b_i*) = Ψ(a_i*) - a_i*,
/// d(η_i) = -b_i* a_i - Ψ(a_i*) b_i.
pub fn knot_dg_category(b: &BraidWord) -> Result<LinkDgCategory> {
    knot_writhe_check(b)?;
    let n = b.strand_count();
    let mut target = knot_dg_target(n)?;
    let images = t_free_psi_images(b, &target)?;
    let mut diff = BTreeMap::new();
    for j in 1..=n {
        let psi_a = images[&Sym::from(format!("a{j}").as_str())].clone();
        let psi_as = images[&Sym::from(format!("a{j}*").as_str())].clone();
        let a_t = target.gen(&format!("a{j}"))?;
        let as_t = target.gen(&format!("a{j}*"))?;
        let b_t = target.gen(&format!("b{j}"))?;
        let bs_t = target.gen(&format!("b{j}*"))?;
        diff.insert(
            Sym::from(format!("b{j}").as_str()),
            psi_a.sub(&a_t)?,
        );
        diff.insert(
            Sym::from(format!("b{j}*").as_str()),
            psi_as.sub(&as_t)?,
        );
        let deta = bs_t.mul(&a_t)?.neg().sub(&psi_as.mul(&b_t)?)?;
        diff.insert(Sym::from(format!("eta{j}").as_str()), target.nf(&deta)?);
    }
    target.diff = diff;
    link_dg_from_differentials(
        target,
        b,
        vec!["1".into()],
        vec![("lambda".into(), "mu".into())],
    )
}

/// The knot DG category computed as the explicit colimit: resolve by
/// B^{(n)}, take the Baues-Lemaire cylinder, glue its two ends along
/// (Ψ∘p, p), and eliminate the identified generators.
pub fn knot_dg_category_pushout(b: &BraidWord) -> Result<LinkDgCategory> {
    knot_writhe_check(b)?;
    let n = b.strand_count();
    let op = crate::operators::catalog_operator("gmv_mu_central")?;
    let acat = op.presentation(n)?;
    let (bn, p) = resolution_b_n(n)?;
    let (prime, shift) = cylinder_names(&bn);
    let cyl = bn.cylinder(&prime, &shift)?;

    let mut target = knot_dg_target(n)?;
    let mut objs = BTreeMap::new();
    objs.insert(Sym::from("0"), Sym::from("0"));
    objs.insert(Sym::from("1"), Sym::from("1"));
    let images = t_free_psi_images(b, &target)?;
    let expand = expand_t(&acat, &target, &objs, &|_| Scalar::var("mu"))?;

    // the gluing map φ: Cyl(B^{(n)}) -> target identifies i(g) with Ψ(p(g))
    // and i'(g) with p(g), and keeps the shifted generators
    let mut glue = Substitution::default();
    glue.obj_map = objs.clone();
    for a in bn.quiver.arrows() {
        let g = Element::path(&bn.quiver, Path(vec![a.name.clone()]))?;
        let pg = p.apply(&g, &acat)?;
        let psi_pg = match images.get(&a.name) {
            Some(img) => img.clone(),
            None => {
                // ξ-type generators project to zero, so Ψ(p(ξ)) = 0
                let info = target.quiver.arrow(&shift[&a.name])?;
                Element::zero(info.src.clone(), info.tgt.clone(), info.deg - 1)
            }
        };
        let pg_t = expand.apply(&pg, &target)?;
        glue.arrow_map.insert(a.name.clone(), psi_pg);
        glue.arrow_map.insert(prime[&a.name].clone(), pg_t);
        // b-type and η-type generators survive under their own names
        let survivor = shift[&a.name].clone();
        let info = target.quiver.arrow(&survivor)?;
        glue.arrow_map.insert(
            survivor.clone(),
            Element::path(&target.quiver, Path(vec![info.name.clone()]))?,
        );
    }
    // the identified ξ generators must die coherently: φ(ξ) = Ψ(p(ξ)) = 0
    for a in bn.quiver.arrows() {
        if a.name.as_str().starts_with("xi") {
            let img = &glue.arrow_map[&a.name];
            if !img.is_zero() || !glue.arrow_map[&prime[&a.name]].is_zero() {
                return Err(Error::ResidueNotExpressible(format!(
                    "cylinder end of {} does not vanish in the pushout",
                    a.name
                )));
            }
        }
    }

    // differentials of the survivors are transported through the gluing
    let mut diff = BTreeMap::new();
    for a in bn.quiver.arrows() {
        let sg = shift[&a.name].clone();
        let d_cyl = cyl.pres.d_arrow(&sg)?;
        let img = glue.apply(&d_cyl, &target)?;
        if !img.is_zero() {
            diff.insert(sg, img);
        }
    }
    // the glued-in a-type generators are cycles
    target.diff = diff;
    link_dg_from_differentials(
        target,
        b,
        vec!["1".into()],
        vec![("lambda".into(), "mu".into())],
    )
}

/// The fully noncommutative link DG category of Definition 7 type: one
/// vertex per link component carrying k[λ_i^{±1}, μ_i^{±1}], differentials
/// twisted by λ_i μ_i^{w_i} on the marked strand of each component.
pub fn fnc_link_dg_category(b: &BraidWord) -> Result<LinkDgCategory> {
    let n = b.strand_count();
    let orbits = b.strand_orbits();
    let r = orbits.component_count();
    let comp_of = |j: usize| orbits.component_of[j - 1]; // 0-based component
    let mu_i = |c: usize| Scalar::var(&format!("mu{}", c + 1));
    let lam_i = |c: usize| Scalar::var(&format!("lambda{}", c + 1));
    let writhes = b.writhes();

    // target quiver: vertex "0" plus one vertex per component named "1".."r"
    let mut q = GradedQuiver::new();
    q.add_object("0")?;
    for c in 1..=r {
        q.add_object(format!("{c}"))?;
    }
    let vtx = |j: usize| format!("{}", comp_of(j) + 1);
    for j in 1..=n {
        q.add_arrow(format!("a{j}"), vtx(j), "0", 0)?;
        q.add_arrow(format!("a{j}*"), "0", vtx(j), 0)?;
    }
    for j in 1..=n {
        q.add_arrow(format!("b{j}"), vtx(j), "0", 1)?;
        q.add_arrow(format!("b{j}*"), "0", vtx(j), 1)?;
    }
    for j in 1..=n {
        q.add_arrow(format!("eta{j}"), vtx(j), vtx(j), 2)?;
    }
    let mut rules = Vec::new();
    for j in 1..=n {
        // e_i + a_j* a_j = μ_i, oriented a_j* a_j -> (μ_i - 1) e_i
        rules.push(Rule {
            lhs: Path(vec![
                format!("a{j}*").as_str().into(),
                format!("a{j}").as_str().into(),
            ]),
            rhs: Element::identity(vtx(j).as_str())
                .scale(&mu_i(comp_of(j)).sub(&Scalar::one())),
        });
    }
    let mut target = DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())?;

    // β over the plain GMV carrier, then transported by right-fold
    // T-expansion with the component-wise μ parameters
    let op = crate::operators::catalog_operator("gmv")?;
    let endo = op.braid_action_endo(b)?;
    let mut objs = BTreeMap::new();
    objs.insert(Sym::from("0"), Sym::from("0"));
    for j in 1..=n {
        objs.insert(
            Sym::from(format!("{j}").as_str()),
            Sym::from(vtx(j).as_str()),
        );
    }
    let mu_of_strand = |j: usize| mu_i(comp_of(j));

    let mut diff = BTreeMap::new();
    for j in 1..=n {
        let c = comp_of(j);
        let marked = orbits.marked_strands()[c] == j;
        let twist = if marked {
            lam_i(c).mul(&mu_i(c).pow(writhes.per_component[c])?)
        } else {
            Scalar::one()
        };
        let beta_a = fold_expand_element(
            &target,
            &endo.arrow_map[&Sym::from(format!("a{j}").as_str())],
            &objs,
            &mu_of_strand,
        )?;
        let beta_as = fold_expand_element(
            &target,
            &endo.arrow_map[&Sym::from(format!("a{j}*").as_str())],
            &objs,
            &mu_of_strand,
        )?;
        let a_t = target.gen(&format!("a{j}"))?;
        let as_t = target.gen(&format!("a{j}*"))?;
        let b_t = target.gen(&format!("b{j}"))?;
        let bs_t = target.gen(&format!("b{j}*"))?;
        // d(b_j) = β(a_j) λ_i^{-1} μ_i^{-w_i} - a_j on the marked strand
        diff.insert(
            Sym::from(format!("b{j}").as_str()),
            beta_a.scale(&twist.pow(-1)?).sub(&a_t)?,
        );
        diff.insert(
            Sym::from(format!("b{j}*").as_str()),
            beta_as.scale(&twist).sub(&as_t)?,
        );
        let deta = bs_t
            .mul(&a_t)?
            .neg()
            .sub(&beta_as.scale(&twist).mul(&b_t)?)?;
        diff.insert(Sym::from(format!("eta{j}").as_str()), target.nf(&deta)?);
    }
    target.diff = diff;
    let params = (1..=r)
        .map(|c| (format!("lambda{c}"), format!("mu{c}")))
        .collect();
    let components = (1..=r).map(|c| Sym::from(format!("{c}").as_str())).collect();
    link_dg_from_differentials(target, b, components, params)
}

/// The endomorphism DG algebra at the distinguished object 1 of a knot DG
/// category, presented on the generators A_ij, B_ij, C_ij, D_ij, e_i with
/// the relation A_ii = 1 - μ.
pub fn knot_dga_at_1(link: &LinkDgCategory) -> Result<DgPresentation> {
    let n = link.strand_component.len();
    if link.component_objects.len() != 1 {
        return Err(Error::MultiComponent(link.component_objects.len()));
    }
    let mut q = GradedQuiver::new();
    q.add_object("1")?;
    for i in 1..=n {
        for j in 1..=n {
            q.add_arrow(format!("A{i}{j}"), "1", "1", 0)?;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            q.add_arrow(format!("B{i}{j}"), "1", "1", 1)?;
            q.add_arrow(format!("C{i}{j}"), "1", "1", 1)?;
            q.add_arrow(format!("D{i}{j}"), "1", "1", 2)?;
        }
    }
    for i in 1..=n {
        q.add_arrow(format!("e{i}"), "1", "1", 2)?;
    }
    let one_minus_mu = Scalar::one().sub(&Scalar::var("mu"));
    let mut rules = Vec::new();
    for i in 1..=n {
        rules.push(Rule {
            lhs: Path(vec![format!("A{i}{i}").as_str().into()]),
            rhs: Element::identity("1").scale(&one_minus_mu),
        });
    }
    let mut dga = DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())?;

    let src = &link.pres;
    let pair = |x: &str, y: &str| -> Result<Element> {
        src.nf(&Element::path(
            &src.quiver,
            Path(vec![x.into(), y.into()]),
        )?)
    };
    let mut diff = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            // B_ij = b_i* a_j, C_ij = a_i* b_j, D_ij = b_i* b_j
            let d_b = src.d(&pair(&format!("b{i}*"), &format!("a{j}"))?)?;
            let d_c = src.d(&pair(&format!("a{i}*"), &format!("b{j}"))?)?;
            let d_d = src.d(&pair(&format!("b{i}*"), &format!("b{j}"))?)?;
            diff.insert(
                Sym::from(format!("B{i}{j}").as_str()),
                convert_end1(&d_b, &dga)?,
            );
            diff.insert(
                Sym::from(format!("C{i}{j}").as_str()),
                convert_end1(&d_c, &dga)?,
            );
            diff.insert(
                Sym::from(format!("D{i}{j}").as_str()),
                convert_end1(&d_d, &dga)?,
            );
        }
    }
    for i in 1..=n {
        // e_i = -η_i
        let deta = src.d(&src.gen(&format!("eta{i}"))?)?;
        diff.insert(
            Sym::from(format!("e{i}").as_str()),
            convert_end1(&deta.neg(), &dga)?,
        );
    }
    dga.diff = diff;
    let dd = dga.check_d_squared()?;
    if !dd.pass() {
        let (g, r) = &dd.gen_failures[0];
        return Err(Error::ResidueNotExpressible(format!(
            "d² ≠ 0 on {g} in the endomorphism DGA: {r}"
        )));
    }
    Ok(dga)
}

/// Convert an End(1) element of the knot DG category into the A/B/C/D/e
/// alphabet: a_i* a_j ↦ -A_ij, b_i* a_j ↦ B_ij, a_i* b_j ↦ C_ij,
/// b_i* b_j ↦ D_ij, η_i ↦ -e_i.
pub fn convert_end1(e: &Element, dga: &DgPresentation) -> Result<Element> {
    let mut out = Element::zero("1", "1", e.deg());
    for (path, coeff) in e.terms() {
        let mut letters: Vec<Sym> = Vec::new();
        let mut sign = 1i64;
        let toks = &path.0;
        let mut idx = 0;
        while idx < toks.len() {
            let t = toks[idx].as_str();
            if let Some(i) = t.strip_prefix("eta") {
                letters.push(format!("e{i}").as_str().into());
                sign = -sign;
                idx += 1;
                continue;
            }
            if idx + 1 >= toks.len() {
                return Err(Error::ResidueNotExpressible(format!(
                    "dangling factor {t} in {path}"
                )));
            }
            let u = toks[idx + 1].as_str();
            let star = t.strip_suffix('*');
            let (first, second) = match star {
                Some(f) => (f, u),
                None => {
                    return Err(Error::ResidueNotExpressible(format!(
                        "expected starred factor at {t} in {path}"
                    )))
                }
            };
            let (kind1, i) = split_kind(first)?;
            let (kind2, j) = split_kind(second)?;
            let name = match (kind1, kind2) {
                ('a', 'a') => {
                    sign = -sign;
                    format!("A{i}{j}")
                }
                ('b', 'a') => format!("B{i}{j}"),
                ('a', 'b') => format!("C{i}{j}"),
                ('b', 'b') => format!("D{i}{j}"),
                _ => {
                    return Err(Error::ResidueNotExpressible(format!(
                        "unrecognized pair {t}{u} in {path}"
                    )))
                }
            };
            letters.push(name.as_str().into());
            idx += 2;
        }
        let term = if letters.is_empty() {
            Element::identity("1")
        } else {
            Element::path(&dga.quiver, Path(letters))?
        };
        out.accumulate(&term.scale(&coeff.mul_int(sign)))?;
    }
    dga.nf(&out)
}

fn split_kind(name: &str) -> Result<(char, usize)> {
    let mut chars = name.chars();
    let kind = chars
        .next()
        .ok_or_else(|| Error::ResidueNotExpressible("empty arrow name".into()))?;
    let idx: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::ResidueNotExpressible(format!("bad arrow name {name}")))?;
    Ok((kind, idx))
}

/// A presented associative algebra over a Laurent coefficient ring: the
/// output form of the degree-0 homology extraction.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub pres: DgPresentation,
    pub relations: Vec<Element>,
    /// Invertible scalar parameters (enumerated over units when counting).
    pub params: Vec<String>,
}

/// Degree-0 homology of the knot DGA at 1: free on the rescaled generators
/// a_ij (i ≠ j) modulo the images d(B_ij) = Ψ(a_i*)a_j - a_i*a_j and
/// d(C_ij) = a_i*Ψ(a_j) - a_i*a_j, expressed in the a-generators.
pub fn hc0_presentation(b: &BraidWord) -> Result<AlgebraPresentation> {
    knot_writhe_check(b)?;
    let n = b.strand_count();
    let tfree = crate::operators::mu_central_t_free(n)?;
    let t0 = std::time::Instant::now();
    let images = t_free_psi_images(b, &tfree)?;
    eprintln!("[hc0] images {:?}", t0.elapsed());
    let symbols = a_symbol_presentation(n)?;

    // target: free algebra on a_ij, i ≠ j
    let mut q = GradedQuiver::new();
    q.add_object("1")?;
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                q.add_arrow(format!("a{i}{j}"), "1", "1", 0)?;
            }
        }
    }
    let hc0 = DgPresentation::new(q, RewriteSystem::empty(), BTreeMap::new())?;

    // rescaling A_ij -> a_ij (i<j), A_ij -> -μ a_ij (i>j), A_ii -> (1-μ)e
    let mut rescale = Substitution::default();
    rescale.obj_map.insert("1".into(), "1".into());
    let mu = Scalar::var("mu");
    for i in 1..=n {
        for j in 1..=n {
            let name: Sym = format!("A{i}{j}").as_str().into();
            let img = if i == j {
                Element::identity("1").scale(&Scalar::one().sub(&mu))
            } else if i < j {
                hc0.gen(&format!("a{i}{j}"))?
            } else {
                hc0.gen(&format!("a{i}{j}"))?.scale(&mu.neg())
            };
            rescale.arrow_map.insert(name, img);
        }
    }

    let mut relations: Vec<Element> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let psi_as = &images[&Sym::from(format!("a{i}*").as_str())];
            let psi_a = &images[&Sym::from(format!("a{j}").as_str())];
            let a_j = tfree.gen(&format!("a{j}"))?;
            let as_i = tfree.gen(&format!("a{i}*"))?;
            let base = tfree.mul_nf(&as_i, &a_j)?;
            let d_b = tfree_boundary_mul(&tfree, psi_as, &a_j)?.sub(&base)?;
            let d_c = tfree_boundary_mul(&tfree, &as_i, psi_a)?.sub(&base)?;
            for d in [d_b, d_c] {
                let t1 = std::time::Instant::now();
                let conv = convert_end1(&d, &symbols)?;
                let rel = rescale.apply(&conv, &hc0)?;
                let rel = canonical_relation(&rel);
                eprintln!("[hc0] rel {i}{j} {} terms {:?}", rel.num_terms(), t1.elapsed());
                if rel.is_zero() || relations.contains(&rel) {
                    continue;
                }
                relations.push(rel);
            }
        }
    }
    Ok(AlgebraPresentation {
        pres: hc0,
        relations,
        params: vec!["lambda".into(), "mu".into()],
    })
}

/// The degree-0 A-symbol presentation: one object, arrows A_ij, relation
/// A_ii -> (1-μ)e.
fn a_symbol_presentation(n: usize) -> Result<DgPresentation> {
    let mut q = GradedQuiver::new();
    q.add_object("1")?;
    for i in 1..=n {
        for j in 1..=n {
            q.add_arrow(format!("A{i}{j}"), "1", "1", 0)?;
        }
    }
    let one_minus_mu = Scalar::one().sub(&Scalar::var("mu"));
    let mut rules = Vec::new();
    for i in 1..=n {
        rules.push(Rule {
            lhs: Path(vec![format!("A{i}{i}").as_str().into()]),
            rhs: Element::identity("1").scale(&one_minus_mu),
        });
    }
    DgPresentation::new(q.clone(), RewriteSystem::new(&q, rules)?, BTreeMap::new())
}

/// Humphries-Magnus transport: for every σ_k and off-diagonal generator,
/// the HM formula must agree with the μ-central GMV action transported
/// through A_ij = -a_i* a_j and the rescaling a_ij = A_ij (i<j),
/// -μ^{-1} A_ij (i>j). Returns the disagreement witnesses.
pub fn hm_transport_disagreements(n: usize) -> Result<Vec<String>> {
    let hm = crate::operators::catalog_operator("humphries_magnus")?;
    let hm_pres = hm.presentation(n)?;
    let mu_op = crate::operators::catalog_operator("gmv_mu_central")?;
    let acat = mu_op.presentation(n)?;
    let tfree = crate::operators::mu_central_t_free(n)?;
    let mut objs = BTreeMap::new();
    objs.insert(Sym::from("0"), Sym::from("0"));
    objs.insert(Sym::from("1"), Sym::from("1"));
    let expand = expand_t(&acat, &tfree, &objs, &|_| Scalar::var("mu"))?;
    let symbols = a_symbol_presentation(n)?;
    // rescaling substitution into the HM carrier
    let mut rescale = Substitution::default();
    rescale.obj_map.insert("1".into(), "v".into());
    let mu = Scalar::var("mu");
    for i in 1..=n {
        for j in 1..=n {
            let name: Sym = format!("A{i}{j}").as_str().into();
            let img = if i == j {
                Element::identity("v").scale(&Scalar::one().sub(&mu))
            } else if i < j {
                hm_pres.gen(&format!("a{i}{j}"))?
            } else {
                hm_pres.gen(&format!("a{i}{j}"))?.scale(&mu.neg())
            };
            rescale.arrow_map.insert(name, img);
        }
    }

    let mu_inv = mu.pow(-1)?;
    let mut failures = Vec::new();
    for k in 1..n {
        let hm_sigma = hm.sigma(n, k)?;
        let mu_sigma = mu_op.sigma(n, k)?;
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let pair = Element::path(
                    &acat.quiver,
                    Path(vec![
                        format!("a{i}*").as_str().into(),
                        format!("a{j}").as_str().into(),
                    ]),
                )?;
                // a_ij transported into the μ-central carrier
                let x = if i < j {
                    pair.neg()
                } else {
                    pair.scale(&mu_inv)
                };
                let img = mu_sigma.apply(&x, &acat)?;
                let img = expand.apply(&img, &tfree)?;
                let conv = convert_end1(&img, &symbols)?;
                let through = rescale.apply(&conv, &hm_pres)?;
                let direct =
                    hm_sigma.apply(&hm_pres.gen(&format!("a{i}{j}"))?, &hm_pres)?;
                if through != direct {
                    failures.push(format!(
                        "sigma_{k} on a{i}{j}: transported {through} vs direct {direct}"
                    ));
                }
            }
        }
    }
    Ok(failures)
}

/// Scale a relation by the central unit that normalizes the coefficient of
/// its smallest term; canonical representative up to unit multiples.
pub fn canonical_relation(e: &Element) -> Element {
    let Some((_, c)) = e.terms().next() else {
        return e.clone();
    };
    let cn = c.unit_normalize();
    if let Some(u) = cn.exact_div(c) {
        if u.as_unit().is_some() {
            return e.scale(&u);
        }
    }
    e.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::catalog_operator;

    #[test]
    fn artin_closure_identity_braid() {
        let op = catalog_operator("artin").unwrap();
        let b = BraidWord::identity(3);
        match categorical_closure(&op, &b).unwrap() {
            ClosurePresentation::Group(g) => {
                assert_eq!(g.num_generators, 3);
                assert!(g.relators.is_empty());
            }
            _ => panic!("expected a group"),
        }
    }

    #[test]
    fn artin_closure_trefoil() {
        let op = catalog_operator("artin").unwrap();
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        match categorical_closure(&op, &b).unwrap() {
            ClosurePresentation::Group(g) => {
                assert_eq!(g.num_generators, 2);
                assert_eq!(g.relators.len(), 2);
                // β(x1) = x1 x2 x1 x2 x1^{-1} x2^{-1} x1^{-1}
                let r = &g.relators[0];
                assert_eq!(r.0, vec![1, 2, 1, 2, -1, -2, -1, -1]);
            }
            _ => panic!("expected a group"),
        }
    }

    #[test]
    fn psi_on_sigma1() {
        // Ψ(a1) = λ^{-1} T1 T2^{-1} a2 for the plain GMV operator on σ1
        let op = catalog_operator("gmv").unwrap();
        let b = BraidWord::new(2, vec![1]).unwrap();
        let psi = writhe_adjusted_psi(&op, &b, true).unwrap();
        let pres = op.presentation(2).unwrap();
        let got = psi.apply(&pres.gen("a1").unwrap(), &pres).unwrap();
        let want = Element::path(
            &pres.quiver,
            Path(vec!["T1".into(), "T2^-1".into(), "a2".into()]),
        )
        .unwrap()
        .scale(&Scalar::var_pow("lambda", -1));
        assert_eq!(got, want);
    }

    #[test]
    fn psi_trivial_cases() {
        // w = 0, no coloring: Ψ0 = β
        let op = catalog_operator("gmv").unwrap();
        let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        assert_eq!(b.writhes().total, 0);
        let psi = writhe_adjusted_psi(&op, &b, false).unwrap();
        let beta = op.braid_action_endo(&b).unwrap();
        let pres = op.presentation(3).unwrap();
        assert!(psi.agrees_with(&beta, &pres, &pres).unwrap());
        // trivial torsion: Ψ = β for any writhe
        let artin = catalog_operator("artin").unwrap();
        let t = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let psi = writhe_adjusted_psi(&artin, &t, false).unwrap();
        let beta = artin.braid_action_endo(&t).unwrap();
        let pres = artin.presentation(2).unwrap();
        assert!(psi.agrees_with(&beta, &pres, &pres).unwrap());
    }

    #[test]
    fn resolution_b_shape() {
        let (bres, p) = resolution_b().unwrap();
        let q = &bres.quiver;
        let dxi = bres.d_arrow(&"xi".into()).unwrap();
        let want = Element::path(q, Path::of(&["a*", "a"]))
            .unwrap()
            .sub(&Element::identity("1").scale(&Scalar::var("mu").sub(&Scalar::one())))
            .unwrap();
        assert_eq!(dxi, want);
        assert!(bres.check_d_squared().unwrap().pass());
        // p(xi) = 0, p(a) = a
        assert!(p.arrow_map[&Sym::from("xi")].is_zero());
        assert_eq!(
            p.arrow_map[&Sym::from("a")].to_string(),
            "a1"
        );
    }

    #[test]
    fn cylinder_of_b_matches_stated_differential() {
        let (bres, _) = resolution_b().unwrap();
        let (prime, shift) = cylinder_names(&bres);
        let cyl = bres.cylinder(&prime, &shift).unwrap();
        // d(eta) = xi - xi' - b* a' - a* b
        let deta = cyl.pres.d_arrow(&"eta".into()).unwrap();
        let q = &cyl.pres.quiver;
        let want = Element::path(q, Path::of(&["xi"]))
            .unwrap()
            .sub(&Element::path(q, Path::of(&["xi'"])).unwrap())
            .unwrap()
            .sub(&Element::path(q, Path::of(&["b*", "a'"])).unwrap())
            .unwrap()
            .sub(&Element::path(q, Path::of(&["a*", "b"])).unwrap())
            .unwrap();
        assert_eq!(deta, want);
        assert!(cyl.pres.check_d_squared().unwrap().pass());
        assert!(cyl.check_retraction().unwrap());
        assert!(cyl.check_homotopy_identity().unwrap().is_empty());
    }

    #[test]
    fn corrupted_cylinder_differential_fails_d_squared() {
        let (bres, _) = resolution_b().unwrap();
        let (prime, shift) = cylinder_names(&bres);
        let cyl = bres.cylinder(&prime, &shift).unwrap();
        let mut bad = cyl.pres.clone();
        // flip the sign of b* a' in d(eta)
        let q = bad.quiver.clone();
        let deta = bad.d_arrow(&"eta".into()).unwrap();
        let flip = Element::path(&q, Path::of(&["b*", "a'"]))
            .unwrap()
            .scale(&Scalar::int(2));
        let corrupted = deta.add(&flip).unwrap();
        bad.diff.insert("eta".into(), corrupted);
        let report = bad.check_d_squared().unwrap();
        assert!(!report.pass());
        assert!(!report.gen_failures.is_empty());
    }

    #[test]
    fn unknot_dg_category() {
        let b = BraidWord::identity(1);
        let link = knot_dg_category(&b).unwrap();
        // d(b1) = (λ^{-1} - 1) a1
        let db = link.pres.d_arrow(&"b1".into()).unwrap();
        let want = link
            .pres
            .gen("a1")
            .unwrap()
            .scale(&Scalar::var_pow("lambda", -1).sub(&Scalar::one()));
        assert_eq!(db, want);
    }

    #[test]
    fn trefoil_dg_category_passes_d_squared() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let link = knot_dg_category(&b).unwrap();
        assert!(link.pres.check_d_squared().unwrap().pass());
    }

    #[test]
    fn unknot_dga_and_hc0() {
        let b = BraidWord::identity(1);
        let link = knot_dg_category(&b).unwrap();
        let dga = knot_dga_at_1(&link).unwrap();
        // d(B11) = (λ-1)(μ-1) e
        let db = dga.d_arrow(&"B11".into()).unwrap();
        let lam = Scalar::var("lambda");
        let mu = Scalar::var("mu");
        let want = Element::identity("1").scale(
            &lam.sub(&Scalar::one()).mul(&mu.sub(&Scalar::one())),
        );
        assert_eq!(db, want);
        let hc0 = hc0_presentation(&b).unwrap();
        assert_eq!(hc0.relations.len(), 1);
        assert_eq!(
            hc0.relations[0],
            Element::identity("1").scale(&lam.sub(&Scalar::one()).mul(&mu.sub(&Scalar::one())))
        );
        assert_eq!(hc0.pres.quiver.arrows().count(), 0);
    }

    #[test]
    fn trefoil_hc0_has_two_generators() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let hc0 = hc0_presentation(&b).unwrap();
        assert_eq!(hc0.pres.quiver.arrows().count(), 2);
        // one relation per d(B_ij) and d(C_ij), none of which coincide here
        assert_eq!(hc0.relations.len(), 8);
    }

    #[test]
    fn fnc_hopf_link_d_squared() {
        let b = BraidWord::new(2, vec![1, 1]).unwrap();
        let link = fnc_link_dg_category(&b).unwrap();
        assert_eq!(link.component_objects.len(), 2);
        assert!(link.pres.check_d_squared().unwrap().pass());
    }

    #[test]
    fn fnc_unmarked_strand_untwisted() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let link = fnc_link_dg_category(&b).unwrap();
        // strand 2 is unmarked: d(b2) = β(a2) - a2 has no λ
        let db2 = link.pres.d_arrow(&"b2".into()).unwrap();
        for (_, c) in db2.terms() {
            for (m, _) in c.terms() {
                assert_eq!(m.exponent("lambda1"), 0);
            }
        }
        // strand 1 is marked: d(b1) carries λ1^{-1}
        let db1 = link.pres.d_arrow(&"b1".into()).unwrap();
        assert!(db1
            .terms()
            .any(|(_, c)| c.terms().any(|(m, _)| m.exponent("lambda1") != 0)));
    }
}
