"""AI Pipelines module - Training pipeline dispatch and evaluation."""

from src.ai.pipelines.training_pipeline import PipelineResult, evaluate_scenes, run_pipeline

__all__ = ["PipelineResult", "evaluate_scenes", "run_pipeline"]
