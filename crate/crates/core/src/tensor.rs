//! Channel-major feature maps flowing between layers.

use crate::error::{Error, Result};

/// Real-valued tensor of shape (channels, height, width), stored row-major
/// within each channel.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMap {
    channels: usize,
    height: usize,
    width: usize,
    values: Vec<f64>,
}

impl FeatureMap {
    pub fn zeros(channels: usize, height: usize, width: usize) -> Self {
        FeatureMap {
            channels,
            height,
            width,
            values: vec![0.0; channels * height * width],
        }
    }

    pub fn from_values(
        channels: usize,
        height: usize,
        width: usize,
        values: Vec<f64>,
    ) -> Result<Self> {
        if values.len() != channels * height * width {
            return Err(Error::shape(format!(
                "feature map {channels}x{height}x{width} needs {} values, got {}",
                channels * height * width,
                values.len()
            )));
        }
        Ok(FeatureMap { channels, height, width, values })
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.channels, self.height, self.width)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn index(&self, c: usize, y: usize, x: usize) -> usize {
        (c * self.height + y) * self.width + x
    }

    #[inline]
    pub fn get(&self, c: usize, y: usize, x: usize) -> f64 {
        self.values[self.index(c, y, x)]
    }

    #[inline]
    pub fn set(&mut self, c: usize, y: usize, x: usize, v: f64) {
        let i = self.index(c, y, x);
        self.values[i] = v;
    }

    #[inline]
    pub fn add(&mut self, c: usize, y: usize, x: usize, v: f64) {
        let i = self.index(c, y, x);
        self.values[i] += v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Verify every entry lies in [0, 1); quantum encodings require this.
    pub fn check_unit_range(&self) -> Result<()> {
        for &v in &self.values {
            if !(0.0..1.0).contains(&v) {
                return Err(Error::EncodingDomain { value: v });
            }
        }
        Ok(())
    }

    pub fn same_shape(&self, other: &FeatureMap) -> bool {
        self.shape() == other.shape()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_channel_major() {
        let mut m = FeatureMap::zeros(2, 3, 4);
        m.set(1, 2, 3, 5.0);
        assert_eq!(m.values()[(1 * 3 + 2) * 4 + 3], 5.0);
        assert_eq!(m.get(1, 2, 3), 5.0);
    }

    #[test]
    fn from_values_checks_length() {
        assert!(FeatureMap::from_values(1, 2, 2, vec![0.0; 3]).is_err());
        assert!(FeatureMap::from_values(1, 2, 2, vec![0.0; 4]).is_ok());
    }

    #[test]
    fn unit_range_check() {
        let m = FeatureMap::from_values(1, 1, 2, vec![0.0, 0.999]).unwrap();
        assert!(m.check_unit_range().is_ok());
        let m = FeatureMap::from_values(1, 1, 2, vec![0.0, 1.0]).unwrap();
        assert!(m.check_unit_range().is_err());
    }
}
