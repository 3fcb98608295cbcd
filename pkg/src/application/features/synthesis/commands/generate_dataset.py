"""Generate dataset command use case."""

from src.application.common.base_use_case import UseCase
from src.application.features.synthesis.dtos import GenerateDatasetInput, GenerateDatasetOutput
from src.core.observability import get_logger
from src.domain.interfaces.repositories import ISceneRepository
from src.domain.services.scene_synthesis import generate_dataset

logger = get_logger(__name__)


class GenerateDatasetCommand(UseCase[GenerateDatasetInput, GenerateDatasetOutput]):
    """Use case for writing a synthetic dataset and its manifest."""

    def __init__(self, repository: ISceneRepository):
        self.repository = repository

    def execute(self, input_dto: GenerateDatasetInput) -> GenerateDatasetOutput:
        """Generate every scene first, so a bad spec writes nothing."""
        scenes = generate_dataset(
            input_dto.spec, input_dto.scene_count, input_dto.seed, workers=input_dto.workers
        )
        manifest = self.repository.save_dataset(
            scenes,
            input_dto.output_dir,
            metadata={
                "generator": "synth",
                "seed": input_dto.seed,
                "scene_count": input_dto.scene_count,
                "spec": input_dto.spec.to_dict(),
            },
        )
        point_count = sum(s.point_count for s in scenes)
        logger.info("dataset_generated", scenes=len(scenes), points=point_count)
        return GenerateDatasetOutput(
            manifest_path=manifest, scene_count=len(scenes), point_count=point_count
        )
