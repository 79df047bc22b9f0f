# -*- coding: utf-8 -*-
# Generated by Django 3.2.16 on 2026-10-19 09:12
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SeesawRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('task_label', models.CharField(blank=True, max_length=255)),
                ('task_code', models.PositiveIntegerField()),
                ('t', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('q', models.FloatField(blank=True, null=True)),
                ('restarts', models.PositiveIntegerField()),
                ('seed', models.PositiveIntegerField(default=0)),
                ('value', models.FloatField()),
                ('cycles', models.PositiveIntegerField()),
                ('strategy', models.JSONField()),
                ('date', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'See-saw run',
                'ordering': ['-date'],
            },
        ),
    ]
