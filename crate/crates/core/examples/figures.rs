//! Writes every figure preset as an SVG file into the directory given as
//! the first argument (default: the system temp directory).

use bicycle_geodesics::figures::{render, Preset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map_or_else(std::env::temp_dir, Into::into);
    for preset in Preset::ALL {
        let file = dir.join(format!("{}.svg", preset.name()));
        std::fs::write(&file, render(preset, 0.5)?.render())?;
        println!("wrote {}", file.display());
    }
    Ok(())
}
