"""CloudClean - noisy-label cleaning for labelled 3D point clouds."""
