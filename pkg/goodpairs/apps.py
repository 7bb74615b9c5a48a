from django.apps import AppConfig


class GoodpairsConfig(AppConfig):
    name = "goodpairs"
    verbose_name = "Good pairs of branchings"
