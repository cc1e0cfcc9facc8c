//! Scenario data model: configuration, array responses, channels, the radar
//! scene, hybrid precoders and receive combiners.

mod array;
mod channel;
mod combiner;
mod config;
mod precoder;
mod radar;

pub use array::{beampattern, fft_analog_precoder, steering_vector};
pub use channel::{gen_comm_channel, CommChannel};
pub use combiner::{svd_combiner, Combiners};
pub use config::SystemConfig;
pub use precoder::{transmit_signal, HybridPrecoder, Selection};
pub use radar::{block_slots, gen_radar_scene, RadarScene};
