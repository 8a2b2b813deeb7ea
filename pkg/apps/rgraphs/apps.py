from django.apps import AppConfig


class RgraphsConfig(AppConfig):
    name = 'apps.rgraphs'
    verbose_name = 'r-graph imbalances'
