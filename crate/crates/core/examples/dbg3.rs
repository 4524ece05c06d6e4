use catbraid::braid::BraidWord;
use catbraid::closure::hc0_presentation;
use catbraid::invariants::hc0_point_grid;
use std::time::Instant;

fn main() {
    let b = BraidWord::new(4, vec![1, 1, 1, -2, 1, -2, 3]).unwrap();
    let t0 = Instant::now();
    let hc0 = hc0_presentation(&b).unwrap();
    let max_terms = hc0.relations.iter().map(|r| r.num_terms()).max().unwrap_or(0);
    println!(
        "hc0 B4: {} gens {} rels, max {} terms ({:?})",
        hc0.pres.quiver.arrows().count(),
        hc0.relations.len(),
        max_terms,
        t0.elapsed()
    );
    for q in [3u16, 5] {
        let t0 = Instant::now();
        let g = hc0_point_grid(&b, q, 1).unwrap();
        println!("grid q={q}: total {} ({:?})", g.iter().map(|(_, c)| c).sum::<u64>(), t0.elapsed());
    }
}
