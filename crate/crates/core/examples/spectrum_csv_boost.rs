//! Round-trips a spectrum through CSV and boosts it, as the `boost-file`
//! subcommand does.

use wavepacket_am::spectrum::{boost_spectrum, make_two_wave, read_csv, write_csv};
use wavepacket_am::{Boost, Vec3};

fn main() -> wavepacket_am::Result<()> {
    let cloud = make_two_wave(0.8, 0.6, -1.0, 1.0)?;
    let mut text = Vec::new();
    write_csv(&mut text, &cloud).expect("write to memory");
    println!("lab spectrum:\n{}", String::from_utf8_lossy(&text));

    let parsed = read_csv(text.as_slice())?;
    assert_eq!(parsed, cloud);
    let rest = boost_spectrum(&parsed.into(), &Boost::new(Vec3::new(0.0, 0.0, 0.8))?);
    let mut out = Vec::new();
    write_csv(&mut out, &rest).expect("write to memory");
    println!("boosted by 0.8ẑ:\n{}", String::from_utf8_lossy(&out));

    match read_csv("kx,ky,kz,mass,re_a,im_a,sigma,weight\n1,0,x,0,1,0,1,1\n".as_bytes()) {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
