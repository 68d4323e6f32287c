//! Thinning, spur pruning and point classification on simple shapes.
//!
//! ```bash
//! cargo run -p skeltrack --example skeletonize_shapes
//! ```

use skeltrack::features::{bounding_box, classify_points};
use skeltrack::skeletonizer::{prune, skeletonize, thin, SkeletonConfig};
use skeltrack::BinaryImage;

fn filled(w: usize, h: usize, rects: &[(usize, usize, usize, usize)]) -> BinaryImage {
    let mut m = BinaryImage::new(w, h);
    for &(x0, y0, rw, rh) in rects {
        for y in y0..y0 + rh {
            for x in x0..x0 + rw {
                m.set(x, y, true);
            }
        }
    }
    m
}

fn show(name: &str, mask: &BinaryImage, skeleton: &BinaryImage) -> skeltrack::Result<()> {
    let f = classify_points(skeleton, bounding_box(mask)?)?;
    println!(
        "{name}: {} skeleton px, {} endpoints, {} fork points, {} branch points",
        f.len(),
        f.endpoints.len(),
        f.fork_points.len(),
        f.branch_points.len()
    );
    for y in 0..skeleton.height() {
        let row: String = (0..skeleton.width())
            .map(|x| match (skeleton.get(x, y), mask.get(x, y)) {
                (true, _) => match skeleton.neighbour_count(x, y) {
                    0 | 1 => 'E',
                    2 => '#',
                    _ => 'F',
                },
                (false, true) => '+',
                _ => '.',
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}

fn main() -> skeltrack::Result<()> {
    let cfg = SkeletonConfig::default();

    let bar = filled(14, 10, &[(2, 2, 10, 5)]);
    show("bar", &bar, &thin(&bar)?)?;

    let plus = filled(31, 31, &[(2, 14, 27, 3), (14, 2, 3, 27)]);
    show(
        "plus",
        &plus,
        &skeletonize(&plus, &cfg).expect("big enough"),
    )?;

    // a long stroke with a short bump: the bump's spur is pruned away
    let bumpy = filled(40, 12, &[(2, 4, 36, 4), (20, 1, 3, 4)]);
    let raw = thin(&bumpy)?;
    let pruned = prune(&raw, &cfg);
    println!(
        "bumpy: {} px before pruning, {} after",
        raw.count_white(),
        pruned.count_white()
    );
    show("bumpy (pruned)", &bumpy, &pruned)?;
    Ok(())
}
